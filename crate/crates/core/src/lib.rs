//! Partition families counted by Catalan and ballot numbers, built three
//! independent ways: recursive augmentation with `tau`-closure, closed
//! inequality characterizations, and bijections with rooted plane trees and
//! ordered forests.

pub mod bijection;
pub mod closed_form;
pub mod counting;
pub mod error;
pub mod family;
pub mod partition;
pub mod render;
pub mod verify;
pub mod tree;

#[cfg(test)]
mod fixtures;

pub use error::{Error, Result};
