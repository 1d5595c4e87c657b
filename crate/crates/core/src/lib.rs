//! Generators, search engines and verifiers for eight integer sequences
//! with open problems attached: beastly numbers and reverse-and-add
//! trajectories, Angelini's self-describing letter sequence, persistence
//! and powertrains, substring-duplication closures, curling numbers,
//! Quet's prime recurrence, tours on the flat torus, and the certified
//! Lagarias slack sequence.

pub mod angelini;
pub mod curling;
pub mod digitgames;
pub mod duplication;
pub mod harness;
pub mod lagarias;
pub mod numerics;
pub mod quet;
pub mod tsp;

pub use numerics::{Natural, Rational};

/// Any failure raised by this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Numerics(#[from] numerics::NumericsError),
    #[error(transparent)]
    DigitGame(#[from] digitgames::DigitGameError),
    #[error(transparent)]
    Angelini(#[from] angelini::AngeliniError),
    #[error(transparent)]
    Duplication(#[from] duplication::DuplicationError),
    #[error(transparent)]
    Curling(#[from] curling::CurlingError),
    #[error(transparent)]
    Quet(#[from] quet::QuetError),
    #[error(transparent)]
    Tsp(#[from] tsp::TspError),
    #[error(transparent)]
    Lagarias(#[from] lagarias::LagariasError),
    #[error(transparent)]
    Harness(#[from] harness::HarnessError),
}
