//! Worked examples shared by unit tests.

pub(crate) const FIG3: [usize; 10] = [7, 6, 5, 3, 3, 3, 3, 3, 3, 1];

pub(crate) const OMEGA_EXAMPLE: [usize; 24] = [
    22, 22, 22, 21, 21, 21, 21, 20, 17, 17, 17, 16, 16, 15, 15, 15, 14, 14, 13, 12, 6, 3, 3, 3,
];
