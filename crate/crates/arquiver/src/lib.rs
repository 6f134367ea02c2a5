//! Auslander-Reiten quivers of ADE path algebras through the lens of reduced
//! words, chamber weights, and Coxeter-element combinatorics.

pub mod arq;
pub mod chamber;
pub mod cli;
pub mod error;
pub mod matrix;
pub mod quiverform;
pub mod rootsys;
pub mod typea;
pub mod weyl;
pub mod words;

pub use arq::ARQuiver;
pub use chamber::{ChamberSeq, LevelStructure, LinearityReport, SweepReport};
pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use quiverform::{Orientation, RingelForm};
pub use rootsys::{DynkinType, Family, Root, RootSystem, Weight};
pub use typea::{Column, CoxeterCycle, WiringDiagram, WiringFormat};
pub use weyl::{GeneratorSet, WeylElement};
pub use words::{Census, CensusBudget, CommClass, ReducedWord, RootOrder};
