//! Numerical simulator for a charge-encoded Fredkin gate and one-bit
//! full-adder built from three single-level quantum dots.
//!
//! Logic is stored in the charge state of each dot (an empty dot is logical
//! 1, a charged dot is logical 0) and the conditional swap is produced by
//! the coherent dynamics of a three-site Hubbard Hamiltonian: the control
//! dot couples capacitively to the first target dot and detunes the
//! target-target pair transfer whenever it is charged. The crate covers
//!
//! * exact diagonalization of the three-dot Fock space ([`fock`],
//!   [`hamiltonian`]),
//! * unitary and stochastic time evolution ([`dynamics`]),
//! * gate-level analysis: timing, mode frequencies, leakage, fidelity and
//!   truth tables ([`fredkin`]),
//! * quasistatic and high-frequency charge-noise studies ([`noise`]),
//! * the measured three-dot full-adder protocol ([`adder`]),
//! * the energy ledger of a protocol run and comparisons against
//!   conventional technologies ([`energetics`]).
//!
//! Energies are dimensionless in units of the target-target tunnel
//! coupling Γ; times are in units of ħ/Γ. The single SI anchor is the
//! physical value of Γ in μeV carried by
//! [`hamiltonian::HubbardParams::gamma_si_uev`].

pub mod adder;
pub mod dynamics;
pub mod energetics;
pub mod error;
pub mod fock;
pub mod fredkin;
pub mod hamiltonian;
pub mod noise;
pub mod units;

pub use error::{Error, Result};
