//! Cross-validation harness: every structural property checked exhaustively
//! up to a size bound, one record per suite.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{
    forest_to_partition, pair_to_partition, partition_to_forest, partition_to_pair, tau_on_pair,
};
use crate::closed_form::{
    compress_t, find_square_core, member_omega, member_square, mu_tilde, satisfies_square_conditions,
    theta, theta_fiber,
};
use crate::counting::{ballot, binomial, catalan};
use crate::error::{Error, Result};
use crate::family::{families_by_orbit, grow_omega_family, grow_square_family};
use crate::partition::{enumerate_pnk, enumerate_square, gamma, tau, BoundedPartition, Cap, SquarePartition};
use crate::tree::{attach, cut, enumerate_forests, enumerate_pairs, enumerate_trees};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    pub range: String,
    pub examined: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub detail: Vec<String>,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_parts: usize,
    pub max_m: Option<usize>,
    pub records: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn record(&self, name: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// Human-readable summary without timings, so repeated runs print
    /// identical text.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!(
                "{:<4} {:<22} {:<24} examined={}\n",
                r.status.to_string(),
                r.name,
                r.range,
                r.examined
            ));
            for d in &r.detail {
                out.push_str(&format!("       {d}\n"));
            }
            if let Some(c) = &r.counterexample {
                out.push_str(&format!("       counterexample: {c}\n"));
            }
        }
        let failed = self.records.iter().filter(|r| r.status == Status::Fail).count();
        out.push_str(&format!(
            "{} suites, {} failed\n",
            self.records.len(),
            failed
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Deliberate mutations used to check that the harness notices a broken
/// characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Evaluate the rising condition as `mu~(mu~(i)) < i`.
    FlipRising,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_parts: usize,
    pub max_m: Option<usize>,
    pub parallel: bool,
    pub fault: Option<Fault>,
    pub cap: Cap,
}

impl VerifyConfig {
    pub fn new(max_parts: usize, max_m: Option<usize>) -> Self {
        VerifyConfig {
            max_parts,
            max_m,
            parallel: true,
            fault: None,
            cap: Cap::default(),
        }
    }
}

#[derive(Default)]
struct Outcome {
    examined: u64,
    counterexample: Option<String>,
    detail: Vec<String>,
}

impl Outcome {
    fn tick(&mut self) {
        self.examined += 1;
    }

    fn fail(&mut self, what: String) {
        if self.counterexample.is_none() {
            self.counterexample = Some(what);
        }
    }
}

type SuiteFn = fn(&VerifyConfig, &mut Outcome) -> Result<()>;

struct Suite {
    name: &'static str,
    needs_m: bool,
    run: SuiteFn,
}

const SUITES: &[Suite] = &[
    Suite { name: "counting-oracles", needs_m: false, run: counting_oracles },
    Suite { name: "tau-involution", needs_m: false, run: tau_involution },
    Suite { name: "square-core-witness", needs_m: false, run: square_core_witness },
    Suite { name: "square-cardinality", needs_m: false, run: square_cardinality },
    Suite { name: "covering-disjointness", needs_m: false, run: covering_disjointness },
    Suite { name: "square-closed-form", needs_m: false, run: square_closed_form },
    Suite { name: "theta-reduction", needs_m: false, run: theta_reduction },
    Suite { name: "pair-bijection", needs_m: false, run: pair_bijection },
    Suite { name: "tau-equivariance", needs_m: false, run: tau_equivariance },
    Suite { name: "cut-attach", needs_m: false, run: cut_attach },
    Suite { name: "compression-lemma", needs_m: true, run: compression_lemma },
    Suite { name: "condition-swap", needs_m: true, run: condition_swap },
    Suite { name: "omega-cardinality", needs_m: true, run: omega_cardinality },
    Suite { name: "omega-closed-form", needs_m: true, run: omega_closed_form },
    Suite { name: "m1-equivalence", needs_m: true, run: m1_equivalence },
    Suite { name: "lmh-intervals", needs_m: true, run: lmh_intervals },
    Suite { name: "forest-bijection", needs_m: true, run: forest_bijection },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// Runs every suite. Only an oversized request is an error; property
/// failures are reported in the records.
pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let n = cfg.max_parts;
    if n == 0 || cfg.max_m == Some(0) {
        return Err(Error::Precondition("max_parts and max_m must be at least 1".into()));
    }
    let widest = n + cfg.max_m.unwrap_or(1).max(1) - 1;
    cfg.cap
        .check(&binomial((n + widest - 1) as u64, n as i64), "partitions per sweep")?;
    cfg.cap.check(&catalan(n as u64 + 1), "trees per sweep")?;

    let run_one = |s: &Suite| -> CheckRecord {
        let range = match (s.needs_m, cfg.max_m) {
            (true, Some(m)) => format!("ell<={n} m<={m}"),
            (true, None) => "needs --max-m".to_string(),
            (false, _) => format!("ell<={n}"),
        };
        if s.needs_m && cfg.max_m.is_none() {
            return CheckRecord {
                name: s.name,
                range,
                examined: 0,
                status: Status::Skipped,
                counterexample: None,
                detail: Vec::new(),
                wall_ms: 0.0,
            };
        }
        let start = Instant::now();
        let mut out = Outcome::default();
        if let Err(e) = (s.run)(cfg, &mut out) {
            out.fail(format!("error: {e}"));
        }
        CheckRecord {
            name: s.name,
            range,
            examined: out.examined,
            status: if out.counterexample.is_some() { Status::Fail } else { Status::Pass },
            counterexample: out.counterexample,
            detail: out.detail,
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    };

    let records = if cfg.parallel {
        SUITES.par_iter().map(run_one).collect()
    } else {
        SUITES.iter().map(run_one).collect()
    };
    Ok(VerifyReport {
        max_parts: cfg.max_parts,
        max_m: cfg.max_m,
        records,
    })
}

fn max_m(cfg: &VerifyConfig) -> usize {
    cfg.max_m.unwrap_or(0)
}

fn omega_member(cfg: &VerifyConfig, mu: &BoundedPartition, m: usize) -> Result<bool> {
    match cfg.fault {
        None => member_omega(mu, m),
        Some(Fault::FlipRising) => {
            let t = mu_tilde(mu, m)?;
            let rising = (1..=t.len()).all(|i| {
                let v = t.at(i);
                v <= i || t.at(v) < i
            });
            Ok(rising && t.falling_condition())
        }
    }
}

fn counting_oracles(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    let top = 2 * cfg.max_parts.max(1);
    let mut segner: Vec<BigInt> = vec![BigInt::from(1)];
    for n in 1..=top {
        let next = (0..n).map(|i| &segner[i] * &segner[n - 1 - i]).sum();
        segner.push(next);
    }
    for (n, c) in segner.iter().enumerate() {
        out.tick();
        if catalan(n as u64) != *c {
            out.fail(format!("catalan({n}) != {c}"));
            return Ok(());
        }
    }
    for ell in 0..=top as u64 {
        for m in 0..=top as u64 {
            out.tick();
            let diff = binomial(2 * ell + m, ell as i64) - binomial(2 * ell + m, ell as i64 - 1);
            if ballot(ell, m) != diff {
                out.fail(format!("ballot({ell},{m}) != {diff}"));
                return Ok(());
            }
        }
    }
    Ok(())
}

fn tau_involution(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for n in 1..=cfg.max_parts {
        for k in 1..=cfg.max_parts {
            for mu in enumerate_pnk(n, k, cfg.cap)? {
                out.tick();
                let t = tau(&mu);
                let composed: Vec<usize> = (1..=n)
                    .map(|i| gamma(k, mu.at(gamma(n, i)?)))
                    .collect::<Result<_>>()?;
                if tau(&t) != mu || t.bound() != k || t.len() != n || t.parts() != composed {
                    out.fail(format!("mu={mu} k={k} tau={t}"));
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn square_core_witness(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for ell in 1..=cfg.max_parts {
        for mu in enumerate_pnk(ell, ell, cfg.cap)? {
            out.tick();
            let w = find_square_core(&mu)?;
            let hits: Vec<(usize, usize)> = (1..=ell)
                .flat_map(|b| (1..=ell + 1 - b).map(move |k| (b, k)))
                .filter(|&(b, k)| satisfies_square_conditions(&mu, b, k))
                .collect();
            let wt = find_square_core(&tau(&mu))?;
            if hits != [(w.b, w.k)]
                || wt.k != w.k
                || wt.b != ell + 2 - w.k - w.b
                || wt.core != w.core.tau()
            {
                out.fail(format!("mu={mu} witness {w} candidates {hits:?} tau witness {wt}"));
                return Ok(());
            }
        }
    }
    Ok(())
}

fn square_cardinality(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for ell in 1..=cfg.max_parts {
        for k in 1..=ell {
            for lambda in enumerate_square(k, cfg.cap)? {
                out.tick();
                let fam = grow_square_family(&lambda, ell, cfg.cap)?;
                let c = catalan((ell - k + 1) as u64);
                let want = if lambda.is_self_dual() { c } else { 2 * c };
                if BigInt::from(fam.len()) != want {
                    out.fail(format!("|P^{ell}({lambda})| = {} != {want}", fam.len()));
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn covering_disjointness(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for ell in 1..=cfg.max_parts {
        let orbits = families_by_orbit(ell, cfg.cap)?;
        let all = enumerate_pnk(ell, ell, cfg.cap)?;
        let mut owner: BTreeMap<Vec<usize>, SquarePartition> = BTreeMap::new();
        let mut by_k: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (rep, fam) in &orbits {
            by_k.entry(rep.k()).or_default().push(fam.len());
            for parts in fam.raw_parts() {
                if let Some(prev) = owner.insert(parts.to_vec(), rep.clone()) {
                    out.fail(format!(
                        "{parts:?} lies in the families of both {prev} and {rep} (ell={ell})"
                    ));
                    return Ok(());
                }
            }
        }
        out.examined += all.len() as u64;
        let everything: BTreeSet<Vec<usize>> = all.iter().map(|m| m.parts().to_vec()).collect();
        let covered: BTreeSet<Vec<usize>> = owner.keys().cloned().collect();
        if let Some(missing) = everything.difference(&covered).next() {
            out.fail(format!("{missing:?} is in no family (ell={ell})"));
            return Ok(());
        }
        let expected = binomial((2 * ell - 1) as u64, ell as i64);
        if BigInt::from(all.len()) != expected || covered != everything {
            out.fail(format!("|P^{ell}| = {} vs binomial {expected}", all.len()));
            return Ok(());
        }
        let terms: Vec<String> = by_k
            .values()
            .map(|sizes| {
                let s: Vec<String> = sizes.iter().map(ToString::to_string).collect();
                if sizes.len() == 1 {
                    s[0].clone()
                } else {
                    format!("({})", s.join("+"))
                }
            })
            .collect();
        out.detail
            .push(format!("P^{ell}: {} partitions = {}", all.len(), terms.join(" + ")));
    }
    Ok(())
}

fn square_closed_form(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for ell in 1..=cfg.max_parts {
        let all = enumerate_pnk(ell, ell, cfg.cap)?;
        for k in 1..=ell {
            for lambda in enumerate_square(k, cfg.cap)? {
                let fam = grow_square_family(&lambda, ell, cfg.cap)?;
                for mu in &all {
                    out.tick();
                    let closed = member_square(mu, &lambda)?;
                    if closed != fam.contains(mu) {
                        out.fail(format!(
                            "mu={mu} lambda={lambda}: closed form {closed}, recursion {}",
                            !closed
                        ));
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

fn theta_reduction(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    let one = SquarePartition::new(vec![1])?;
    for ell in 1..=cfg.max_parts {
        for k in 1..=ell {
            let target = grow_square_family(&one, ell - k + 1, cfg.cap)?;
            for lambda in enumerate_square(k, cfg.cap)? {
                let fam = grow_square_family(&lambda, ell, cfg.cap)?;
                let per_fiber = if lambda.is_self_dual() { 1 } else { 2 };
                let mut hits: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
                for mu in fam.iter() {
                    out.tick();
                    let nu = theta(&mu)?;
                    if !target.contains(&nu) || !theta_fiber(&nu, &lambda)?.contains(&mu) {
                        out.fail(format!("mu={mu} lambda={lambda} theta={nu}"));
                        return Ok(());
                    }
                    *hits.entry(nu.parts().to_vec()).or_default() += 1;
                }
                if hits.len() != target.len() || hits.values().any(|&c| c != per_fiber) {
                    out.fail(format!(
                        "theta on P^{ell}({lambda}) hits {} of {} targets",
                        hits.len(),
                        target.len()
                    ));
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn pair_bijection(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    let one = SquarePartition::new(vec![1])?;
    for ell in 1..=cfg.max_parts {
        let fam = grow_square_family(&one, ell, cfg.cap)?;
        let mut image = BTreeSet::new();
        for pair in enumerate_pairs(ell - 1, cfg.cap)? {
            out.tick();
            let mu = pair_to_partition(&pair, ell)?;
            let back = partition_to_pair(&mu)?.shape();
            if back != pair || !fam.contains(&mu) || !image.insert(mu.parts().to_vec()) {
                out.fail(format!("pair {pair} -> {mu} -> {back}"));
                return Ok(());
            }
        }
        if image.len() != fam.len() {
            out.fail(format!("ell={ell}: {} pairs vs {} partitions", image.len(), fam.len()));
            return Ok(());
        }
    }
    Ok(())
}

fn tau_equivariance(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    let one = SquarePartition::new(vec![1])?;
    for ell in 1..=cfg.max_parts {
        for mu in grow_square_family(&one, ell, cfg.cap)?.iter() {
            out.tick();
            let via_pair = tau_on_pair(&partition_to_pair(&mu)?);
            let direct = partition_to_pair(&tau(&mu))?;
            if via_pair != direct {
                out.fail(format!("mu={mu}: tau(pair)={via_pair}, pair(tau)={direct}"));
                return Ok(());
            }
        }
    }
    Ok(())
}

fn cut_attach(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for n in 1..=cfg.max_parts {
        for t in enumerate_trees(n, cfg.cap)? {
            out.tick();
            let p = cut(&t)?;
            if attach(&p) != t || p.edges() + 1 != n {
                out.fail(format!("tree {t} cut to {p}"));
                return Ok(());
            }
        }
        for p in enumerate_pairs(n - 1, cfg.cap)? {
            out.tick();
            if cut(&attach(&p))? != p {
                out.fail(format!("pair {p} does not survive attach/cut"));
                return Ok(());
            }
        }
    }
    Ok(())
}

fn compression_lemma(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for ell in 1..=cfg.max_parts {
        for m in 1..=max_m(cfg) {
            for r in 1..=ell {
                for s in 1..=ell + m - 1 {
                    out.tick();
                    let t = compress_t(r, s, ell, m)?;
                    if !(1..=ell).contains(&t) || (t < r) != (s < r) || (t > r) != (s > r + m - 1) {
                        out.fail(format!("t({r},{s}) = {t} with ell={ell} m={m}"));
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

fn condition_swap(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for ell in 1..=cfg.max_parts {
        for m in 1..=max_m(cfg) {
            for mu in enumerate_pnk(ell, ell + m - 1, cfg.cap)? {
                out.tick();
                let t = mu_tilde(&mu, m)?;
                let tt = mu_tilde(&tau(&mu), m)?;
                let conjugate = (1..=ell).all(|i| ell + 1 - tt.at(i) == t.at(ell + 1 - i));
                if !conjugate
                    || t.falling_condition() != tt.rising_condition()
                    || t.rising_condition() != tt.falling_condition()
                {
                    out.fail(format!("mu={mu} m={m}"));
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn omega_cardinality(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for ell in 1..=cfg.max_parts {
        for m in 1..=max_m(cfg) {
            out.tick();
            let fam = grow_omega_family(m, ell, cfg.cap)?;
            let want = ballot(ell as u64, (m - 1) as u64);
            if BigInt::from(fam.len()) != want {
                out.fail(format!("|P^{ell}(Omega_{m})| = {} != {want}", fam.len()));
                return Ok(());
            }
        }
    }
    Ok(())
}

fn omega_closed_form(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for ell in 1..=cfg.max_parts {
        for m in 1..=max_m(cfg) {
            let fam = grow_omega_family(m, ell, cfg.cap)?;
            for mu in enumerate_pnk(ell, ell + m - 1, cfg.cap)? {
                out.tick();
                let closed = omega_member(cfg, &mu, m)?;
                if closed != fam.contains(&mu) {
                    out.fail(format!(
                        "mu={mu} m={m}: closed form {closed}, recursion {}",
                        !closed
                    ));
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn m1_equivalence(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    let one = SquarePartition::new(vec![1])?;
    for ell in 1..=cfg.max_parts {
        for mu in enumerate_pnk(ell, ell, cfg.cap)? {
            out.tick();
            let a = omega_member(cfg, &mu, 1)?;
            let b = member_square(&mu, &one)?;
            if a != b {
                out.fail(format!("mu={mu}: omega_1 {a}, square (1) {b}"));
                return Ok(());
            }
        }
    }
    Ok(())
}

fn lmh_intervals(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for ell in 1..=cfg.max_parts {
        for m in 1..=max_m(cfg) {
            for mu in grow_omega_family(m, ell, cfg.cap)?.iter() {
                out.tick();
                let c = mu_tilde(&mu, m)?.classes();
                if !c.are_ordered_intervals() || c.fixed.is_empty() || c.fixed.len() > m {
                    out.fail(format!("mu={mu} m={m} L={:?} M={:?} H={:?}", c.low, c.fixed, c.high));
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn forest_bijection(cfg: &VerifyConfig, out: &mut Outcome) -> Result<()> {
    for ell in 1..=cfg.max_parts {
        for m in 1..=max_m(cfg) {
            let fam = grow_omega_family(m, ell, cfg.cap)?;
            let mut image = BTreeSet::new();
            for f in enumerate_forests(m, ell, cfg.cap)? {
                out.tick();
                let mu = forest_to_partition(&f)?;
                let back = partition_to_forest(&mu, m)?;
                if back != f || !fam.contains(&mu) || !image.insert(mu.parts().to_vec()) {
                    out.fail(format!("forest {f} -> {mu} -> {back}"));
                    return Ok(());
                }
            }
            if image.len() != fam.len() {
                out.fail(format!(
                    "ell={ell} m={m}: {} forests vs {} partitions",
                    image.len(),
                    fam.len()
                ));
                return Ok(());
            }
        }
    }
    Ok(())
}
