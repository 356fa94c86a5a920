//! Fock space of three single-level quantum dots.
//!
//! Six fermionic modes (three sites × two spins) in the canonical order
//!
//! ```text
//! (site 0, ↑), (site 0, ↓), (site 1, ↑), (site 1, ↓), (site 2, ↑), (site 2, ↓)
//! ```
//!
//! A basis state is the 6-bit occupation pattern over that order, and basis
//! states are sorted ascending by pattern so matrix layouts are identical
//! across runs. Creation operators carry the Jordan-Wigner sign given by
//! the parity of occupied modes below the target mode; any consistent sign
//! convention yields the same populations, this is the simplest.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

pub const N_SITES: usize = 3;
pub const N_MODES: usize = 6;
/// Dimension of the unrestricted Fock space, 2^6.
pub const FULL_DIM: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::Up, Spin::Down];

    /// Spin projection in units of ħ/2.
    pub fn sz(self) -> i32 {
        match self {
            Spin::Up => 1,
            Spin::Down => -1,
        }
    }

    fn offset(self) -> usize {
        match self {
            Spin::Up => 0,
            Spin::Down => 1,
        }
    }
}

/// One fermionic mode: a (dot, spin) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpinSite {
    site: usize,
    spin: Spin,
}

impl SpinSite {
    pub fn new(site: usize, spin: Spin) -> Result<Self> {
        if site >= N_SITES {
            return Err(Error::SiteOutOfRange(site));
        }
        Ok(SpinSite { site, spin })
    }

    pub fn site(self) -> usize {
        self.site
    }

    pub fn spin(self) -> Spin {
        self.spin
    }

    /// Position of this mode in the canonical order.
    pub fn mode_index(self) -> usize {
        2 * self.site + self.spin.offset()
    }

    pub fn from_mode_index(index: usize) -> Result<Self> {
        if index >= N_MODES {
            return Err(Error::ModeOutOfRange(index));
        }
        let spin = if index % 2 == 0 { Spin::Up } else { Spin::Down };
        Ok(SpinSite { site: index / 2, spin })
    }

    /// All six modes in canonical order.
    pub fn all() -> impl Iterator<Item = SpinSite> {
        (0..N_MODES).map(|m| SpinSite::from_mode_index(m).expect("mode index in range"))
    }
}

impl fmt::Display for SpinSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = match self.spin {
            Spin::Up => "↑",
            Spin::Down => "↓",
        };
        write!(f, "{}{arrow}", self.site)
    }
}

/// Occupation pattern of the six modes; bit m set means mode m is occupied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FockState(u8);

impl FockState {
    pub const VACUUM: FockState = FockState(0);

    pub fn from_bits(bits: u8) -> Result<Self> {
        if bits as usize >= FULL_DIM {
            return Err(Error::InvalidOccupation(bits));
        }
        Ok(FockState(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn occupied(self, mode: SpinSite) -> bool {
        self.0 >> mode.mode_index() & 1 == 1
    }

    /// Total electron number N.
    pub fn electron_count(self) -> u32 {
        self.0.count_ones()
    }

    /// Total spin projection in units of ħ/2 (n↑ − n↓).
    pub fn total_sz(self) -> i32 {
        let up = (self.0 & 0b010101).count_ones() as i32;
        let down = (self.0 & 0b101010).count_ones() as i32;
        up - down
    }

    /// Electron count on one dot (0, 1 or 2).
    pub fn site_occupancy(self, site: usize) -> u32 {
        (self.0 >> (2 * site) & 0b11).count_ones()
    }

    /// Occupation pattern in canonical mode order, e.g. `110000` for a
    /// doubly occupied dot 0.
    pub fn pattern(self) -> String {
        (0..N_MODES).map(|m| if self.0 >> m & 1 == 1 { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}⟩", self.pattern())
    }
}

/// An (N, Sz) symmetry sector; Sz in units of ħ/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sector {
    pub n: u32,
    pub sz: i32,
}

impl Sector {
    pub fn new(n: u32, sz: i32) -> Self {
        Sector { n, sz }
    }

    pub fn contains(self, state: FockState) -> bool {
        state.electron_count() == self.n && state.total_sz() == self.sz
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(N={}, Sz={})", self.n, self.sz)
    }
}

/// Ordered set of Fock states, optionally restricted to one sector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockBasis {
    states: Vec<FockState>,
    sector: Option<Sector>,
    /// Position of each occupation pattern in `states`; FULL_DIM = absent.
    positions: [u8; FULL_DIM],
}

/// Enumerate the basis of a sector (or the full 64-state space for `None`),
/// in canonical ascending-pattern order.
pub fn build_basis(sector: Option<Sector>) -> Result<FockBasis> {
    let states: Vec<FockState> = (0..FULL_DIM as u8)
        .map(FockState)
        .filter(|s| sector.map_or(true, |sec| sec.contains(*s)))
        .collect();
    if states.is_empty() {
        let sec = sector.expect("full basis is never empty");
        return Err(Error::EmptySector { n: sec.n, sz: sec.sz });
    }
    let mut positions = [FULL_DIM as u8; FULL_DIM];
    for (i, s) in states.iter().enumerate() {
        positions[s.bits() as usize] = i as u8;
    }
    Ok(FockBasis { states, sector, positions })
}

impl FockBasis {
    /// The unrestricted 64-state basis.
    pub fn full() -> Self {
        build_basis(None).expect("full basis is never empty")
    }

    pub fn in_sector(n: u32, sz: i32) -> Result<Self> {
        build_basis(Some(Sector::new(n, sz)))
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[FockState] {
        &self.states
    }

    pub fn sector(&self) -> Option<Sector> {
        self.sector
    }

    /// Position of a state in this basis, if present.
    pub fn position(&self, state: FockState) -> Option<usize> {
        let p = self.positions[state.bits() as usize];
        (p as usize != FULL_DIM).then_some(p as usize)
    }
}

/// Mapping between logical bits and dot charge states.
///
/// Logical 1 is always the empty dot. Logical 0 is a doubly occupied dot in
/// the two-electron encoding, or a single electron of fixed spin in the
/// single-electron encoding (spin polarization stands in for the magnetic
/// field that freezes the other spin species out).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Encoding {
    TwoElectron,
    SingleElectron { spin: Spin },
}

impl Encoding {
    /// Mode bits representing logical 0 on the given dot.
    fn zero_pattern(self, site: usize) -> u8 {
        match self {
            Encoding::TwoElectron => 0b11 << (2 * site),
            Encoding::SingleElectron { spin } => 1 << (2 * site + spin.offset()),
        }
    }

    /// The product Fock state encoding `(c, t1, t2)` on dots 0, 1, 2.
    pub fn logical_to_fock(self, bits: [u8; 3]) -> Result<FockState> {
        validate_bits(bits)?;
        let mut pattern = 0u8;
        for (site, &b) in bits.iter().enumerate() {
            if b == 0 {
                pattern |= self.zero_pattern(site);
            }
        }
        Ok(FockState(pattern))
    }

    /// Inverse of [`Encoding::logical_to_fock`]; `None` marks a leakage
    /// state outside the codeword set.
    pub fn fock_to_logical(self, state: FockState) -> Option<[u8; 3]> {
        let mut bits = [0u8; 3];
        for site in 0..N_SITES {
            let dot = state.bits() >> (2 * site) & 0b11;
            bits[site] = if dot == 0 {
                1
            } else if dot == self.zero_pattern(site) >> (2 * site) {
                0
            } else {
                return None;
            };
        }
        Some(bits)
    }

    /// All eight codewords as (bits, state) pairs, in binary input order.
    pub fn codewords(self) -> Vec<([u8; 3], FockState)> {
        all_logical_inputs()
            .map(|bits| {
                let state = self.logical_to_fock(bits).expect("valid bits");
                (bits, state)
            })
            .collect()
    }

    /// Symmetry sector of a codeword; the dynamics never leave it.
    pub fn sector_of(self, bits: [u8; 3]) -> Result<Sector> {
        let state = self.logical_to_fock(bits)?;
        Ok(Sector::new(state.electron_count(), state.total_sz()))
    }
}

pub(crate) fn validate_bits(bits: [u8; 3]) -> Result<()> {
    if bits.iter().any(|&b| b > 1) {
        return Err(Error::InvalidBits(bits));
    }
    Ok(())
}

/// The eight logical inputs (c, t1, t2) in binary order.
pub fn all_logical_inputs() -> impl Iterator<Item = [u8; 3]> {
    (0..8u8).map(|k| [k >> 2 & 1, k >> 1 & 1, k & 1])
}

/// Dense square operator expressed in a fixed basis.
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    basis: FockBasis,
    matrix: DMatrix<Complex64>,
}

impl OperatorMatrix {
    pub fn new(basis: FockBasis, matrix: DMatrix<Complex64>) -> Result<Self> {
        if matrix.nrows() != basis.dim() || matrix.ncols() != basis.dim() {
            return Err(Error::DimensionMismatch {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
                dim: basis.dim(),
            });
        }
        Ok(OperatorMatrix { basis, matrix })
    }

    pub fn basis(&self) -> &FockBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// Max-norm of M − M†.
    pub fn hermiticity_residual(&self) -> f64 {
        let adj = self.matrix.adjoint();
        (&self.matrix - adj).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

fn jordan_wigner_sign(bits: u8, mode_index: usize) -> f64 {
    let below = bits & ((1u8 << mode_index) - 1);
    if below.count_ones() % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Matrix of c†_mode from `basis_in` to `basis_out` (entries ±1).
///
/// The output basis must contain the image of every occupiable input state,
/// i.e. its sector is the input sector with one more electron of the given
/// spin, or both bases are unrestricted.
pub fn creation_operator(
    basis_in: &FockBasis,
    basis_out: &FockBasis,
    mode: SpinSite,
) -> Result<DMatrix<Complex64>> {
    let mut m = DMatrix::zeros(basis_out.dim(), basis_in.dim());
    let bit = 1u8 << mode.mode_index();
    for (col, s) in basis_in.states().iter().enumerate() {
        if s.bits() & bit != 0 {
            continue; // Pauli exclusion
        }
        let target = FockState(s.bits() | bit);
        let row = basis_out
            .position(target)
            .ok_or(Error::SectorMismatch { state: target.bits() })?;
        m[(row, col)] = Complex64::new(jordan_wigner_sign(s.bits(), mode.mode_index()), 0.0);
    }
    Ok(m)
}

/// Matrix of c_mode from `basis_in` to `basis_out` (entries ±1).
pub fn annihilation_operator(
    basis_in: &FockBasis,
    basis_out: &FockBasis,
    mode: SpinSite,
) -> Result<DMatrix<Complex64>> {
    let mut m = DMatrix::zeros(basis_out.dim(), basis_in.dim());
    let bit = 1u8 << mode.mode_index();
    for (col, s) in basis_in.states().iter().enumerate() {
        if s.bits() & bit == 0 {
            continue;
        }
        let target = FockState(s.bits() & !bit);
        let row = basis_out
            .position(target)
            .ok_or(Error::SectorMismatch { state: target.bits() })?;
        m[(row, col)] = Complex64::new(jordan_wigner_sign(target.bits(), mode.mode_index()), 0.0);
    }
    Ok(m)
}

/// Diagonal number operator n̂_mode = c†_mode c_mode in the given basis.
pub fn number_operator(basis: &FockBasis, mode: SpinSite) -> OperatorMatrix {
    let mut m = DMatrix::zeros(basis.dim(), basis.dim());
    for (i, s) in basis.states().iter().enumerate() {
        if s.occupied(mode) {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
    }
    OperatorMatrix { basis: basis.clone(), matrix: m }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_basis_has_64_states_in_ascending_order() {
        let basis = build_basis(None).unwrap();
        assert_eq!(basis.dim(), FULL_DIM);
        for (i, s) in basis.states().iter().enumerate() {
            assert_eq!(s.bits() as usize, i);
        }
    }

    #[test]
    fn two_particle_sectors_have_nine_states() {
        assert_eq!(FockBasis::in_sector(2, 0).unwrap().dim(), 9);
        assert_eq!(FockBasis::in_sector(4, 0).unwrap().dim(), 9);
    }

    #[test]
    fn inconsistent_sector_is_an_error() {
        // Odd N cannot have even Sz.
        match FockBasis::in_sector(1, 0) {
            Err(Error::EmptySector { n: 1, sz: 0 }) => {}
            other => panic!("expected empty-sector error, got {other:?}"),
        }
        assert!(FockBasis::in_sector(7, 1).is_err());
    }

    #[test]
    fn creation_on_vacuum_has_unit_amplitude() {
        let basis = FockBasis::full();
        let mode = SpinSite::new(0, Spin::Up).unwrap();
        let c = creation_operator(&basis, &basis, mode).unwrap();
        let target = FockState::from_bits(0b000001).unwrap();
        let row = basis.position(target).unwrap();
        assert_eq!(c[(row, 0)], Complex64::new(1.0, 0.0));
        // column of vacuum has exactly one entry
        assert_eq!(c.column(0).iter().filter(|z| z.norm() > 0.0).count(), 1);
    }

    #[test]
    fn double_creation_is_zero() {
        let basis = FockBasis::full();
        let mode = SpinSite::new(1, Spin::Down).unwrap();
        let c = creation_operator(&basis, &basis, mode).unwrap();
        let cc = &c * &c;
        assert!(cc.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn number_operator_counts_occupation() {
        let basis = FockBasis::full();
        let mode = SpinSite::new(1, Spin::Up).unwrap();
        let n = number_operator(&basis, mode);
        let vacuum = basis.position(FockState::VACUUM).unwrap();
        assert_eq!(n.matrix()[(vacuum, vacuum)], Complex64::new(0.0, 0.0));
        // logical |0> on dot 1 (two-electron): dot 1 doubly occupied
        let state = Encoding::TwoElectron.logical_to_fock([1, 0, 1]).unwrap();
        let i = basis.position(state).unwrap();
        assert_eq!(n.matrix()[(i, i)], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn total_number_trace_is_192() {
        // each of the 6 modes is occupied in half of the 64 states
        let basis = FockBasis::full();
        let mut trace = Complex64::new(0.0, 0.0);
        for mode in SpinSite::all() {
            trace += number_operator(&basis, mode).matrix().trace();
        }
        assert_eq!(trace, Complex64::new(192.0, 0.0));
    }

    #[test]
    fn logical_round_trip_both_encodings() {
        let encodings = [
            Encoding::TwoElectron,
            Encoding::SingleElectron { spin: Spin::Up },
            Encoding::SingleElectron { spin: Spin::Down },
        ];
        for enc in encodings {
            for bits in all_logical_inputs() {
                let state = enc.logical_to_fock(bits).unwrap();
                assert_eq!(enc.fock_to_logical(state), Some(bits));
            }
        }
    }

    #[test]
    fn codeword_examples() {
        let enc = Encoding::TwoElectron;
        assert_eq!(enc.logical_to_fock([1, 1, 1]).unwrap(), FockState::VACUUM);
        let full = enc.logical_to_fock([0, 0, 0]).unwrap();
        assert_eq!(full.electron_count(), 6);
        let s = enc.logical_to_fock([1, 0, 1]).unwrap();
        assert_eq!(s.electron_count(), 2);
        assert_eq!(s.total_sz(), 0);
        assert_eq!(s.site_occupancy(1), 2);
    }

    #[test]
    fn single_electron_on_a_dot_is_leakage_under_two_electron_encoding() {
        let state = FockState::from_bits(0b000100).unwrap(); // up electron on dot 1
        assert_eq!(Encoding::TwoElectron.fock_to_logical(state), None);
        assert_eq!(
            Encoding::SingleElectron { spin: Spin::Up }.fock_to_logical(state),
            Some([1, 0, 1])
        );
    }

    #[test]
    fn exactly_eight_codewords_per_encoding() {
        for enc in [Encoding::TwoElectron, Encoding::SingleElectron { spin: Spin::Down }] {
            let count = (0..FULL_DIM as u8)
                .filter(|&b| enc.fock_to_logical(FockState(b)).is_some())
                .count();
            assert_eq!(count, 8);
        }
    }

    #[test]
    fn invalid_bits_rejected() {
        assert!(Encoding::TwoElectron.logical_to_fock([2, 0, 0]).is_err());
    }

    #[test]
    fn creation_into_wrong_sector_is_an_error() {
        let from = FockBasis::in_sector(2, 0).unwrap();
        let to = FockBasis::in_sector(2, 0).unwrap(); // same sector: wrong for creation
        let mode = SpinSite::new(0, Spin::Up).unwrap();
        assert!(creation_operator(&from, &to, mode).is_err());
        let to = FockBasis::in_sector(3, 1).unwrap();
        assert!(creation_operator(&from, &to, mode).is_ok());
    }
}
