//! Three-site Hubbard Hamiltonians for the Fredkin gate and the adder.
//!
//! The gate Hamiltonian combines on-site energies ε_l, a tunnel coupling Γ
//! between dots 1 and 2, a nearest-neighbour capacitive coupling V summed
//! over both spin species, and a uniform on-site charging energy U. The
//! adder variant adds a second tunnel coupling Γ* between dots 0 and 1.
//! All energies are stored in units of Γ; `gamma_si_uev` anchors SI output.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::error::{Error, Result};
use crate::fock::{
    annihilation_operator, creation_operator, FockBasis, OperatorMatrix, Spin, SpinSite, N_SITES,
};

/// Hubbard model parameters in units of Γ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HubbardParams {
    /// On-site energies (ε₀, ε₁, ε₂).
    pub eps: [f64; 3],
    /// Tunnel coupling Γ between dots 1 and 2 (1 by definition of the unit).
    pub gamma12: f64,
    /// Auxiliary tunnel coupling Γ* between dots 0 and 1.
    pub gamma01: f64,
    /// Charging energy U, uniform across dots.
    pub charging: f64,
    /// Capacitive coupling V between nearest-neighbour dots.
    pub capacitive: f64,
    /// Physical value of Γ in μeV.
    pub gamma_si_uev: f64,
}

impl Default for HubbardParams {
    fn default() -> Self {
        HubbardParams {
            eps: [0.0; 3],
            gamma12: 1.0,
            gamma01: 0.0,
            charging: 21.83,
            capacitive: 10.0,
            gamma_si_uev: 44.0,
        }
    }
}

impl HubbardParams {
    pub fn validate(&self) -> Result<()> {
        if self.charging < 0.0 {
            return Err(Error::InvalidParams(format!("charging U = {} < 0", self.charging)));
        }
        if self.capacitive < 0.0 {
            return Err(Error::InvalidParams(format!("capacitive V = {} < 0", self.capacitive)));
        }
        if !(self.gamma_si_uev > 0.0) {
            return Err(Error::InvalidParams(format!(
                "gamma_si_ueV = {} must be positive",
                self.gamma_si_uev
            )));
        }
        Ok(())
    }

    /// U − V detuning that sets the pair-transfer time scale.
    pub fn detuning(&self) -> f64 {
        self.charging - self.capacitive
    }

    /// Parse a plain-text `key = value` configuration.
    ///
    /// Keys: `eps0 eps1 eps2 gamma12 gamma01 U V gamma_si_ueV`. Blank lines
    /// and `#` comments are ignored; unknown keys are errors. Missing keys
    /// keep their defaults.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut params = HubbardParams::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = i + 1;
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
                line: lineno,
                msg: format!("expected `key = value`, got `{line}`"),
            })?;
            let value: f64 = value.trim().parse().map_err(|e| Error::Config {
                line: lineno,
                msg: format!("bad number `{}`: {e}", value.trim()),
            })?;
            match key.trim() {
                "eps0" => params.eps[0] = value,
                "eps1" => params.eps[1] = value,
                "eps2" => params.eps[2] = value,
                "gamma12" => params.gamma12 = value,
                "gamma01" => params.gamma01 = value,
                "U" => params.charging = value,
                "V" => params.capacitive = value,
                "gamma_si_ueV" => params.gamma_si_uev = value,
                other => {
                    return Err(Error::Config {
                        line: lineno,
                        msg: format!("unknown key `{other}`"),
                    })
                }
            }
        }
        params.validate()?;
        Ok(params)
    }

    pub fn from_config_file(path: &Path) -> Result<Self> {
        Self::from_config_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_config_string(&self) -> String {
        format!(
            "eps0 = {}\neps1 = {}\neps2 = {}\ngamma12 = {}\ngamma01 = {}\nU = {}\nV = {}\ngamma_si_ueV = {}\n",
            self.eps[0],
            self.eps[1],
            self.eps[2],
            self.gamma12,
            self.gamma01,
            self.charging,
            self.capacitive,
            self.gamma_si_uev
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HamiltonianKind {
    Fredkin,
    Adder,
}

/// A Hamiltonian expressed in a fixed basis, together with the parameters
/// it was built from.
#[derive(Debug, Clone)]
pub struct HamiltonianMatrix {
    op: OperatorMatrix,
    params: HubbardParams,
    kind: HamiltonianKind,
}

impl HamiltonianMatrix {
    pub fn matrix(&self) -> &DMatrix<Complex64> {
        self.op.matrix()
    }

    pub fn basis(&self) -> &FockBasis {
        self.op.basis()
    }

    pub fn operator(&self) -> &OperatorMatrix {
        &self.op
    }

    pub fn params(&self) -> &HubbardParams {
        &self.params
    }

    pub fn kind(&self) -> HamiltonianKind {
        self.kind
    }

    pub fn hermiticity_residual(&self) -> f64 {
        self.op.hermiticity_residual()
    }

    /// Same Hamiltonian with extra on-site energy offsets (δ₀, δ₁, δ₂).
    ///
    /// The ε terms are diagonal with integer occupancies, so the shifted
    /// matrix is exact regardless of basis restriction.
    pub fn with_onsite_offsets(&self, offsets: [f64; 3]) -> HamiltonianMatrix {
        let mut m = self.op.matrix().clone();
        for (i, s) in self.basis().states().iter().enumerate() {
            let shift: f64 = (0..N_SITES)
                .map(|l| offsets[l] * f64::from(s.site_occupancy(l)))
                .sum();
            m[(i, i)] += Complex64::new(shift, 0.0);
        }
        let mut params = self.params.clone();
        for l in 0..N_SITES {
            params.eps[l] += offsets[l];
        }
        HamiltonianMatrix {
            op: OperatorMatrix::new(self.basis().clone(), m).expect("dimensions unchanged"),
            params,
            kind: self.kind,
        }
    }
}

/// H_F = Σ_lσ ε_l n̂_lσ + Σ_σ Γ(c†_1σ c_2σ + h.c.)
///     + Σ_σσ' V(n̂_0σ n̂_1σ' + n̂_1σ n̂_2σ') + Σ_l U n̂_l↑ n̂_l↓,
/// expressed in the given basis.
pub fn build_fredkin_hamiltonian(
    params: &HubbardParams,
    basis: &FockBasis,
) -> Result<HamiltonianMatrix> {
    build(params, basis, HamiltonianKind::Fredkin)
}

/// H_A = H_F + Σ_σ Γ*(c†_0σ c_1σ + h.c.).
pub fn build_adder_hamiltonian(
    params: &HubbardParams,
    basis: &FockBasis,
) -> Result<HamiltonianMatrix> {
    build(params, basis, HamiltonianKind::Adder)
}

fn build(params: &HubbardParams, basis: &FockBasis, kind: HamiltonianKind) -> Result<HamiltonianMatrix> {
    params.validate()?;
    let full = FockBasis::full();
    let dim = full.dim();

    let mode = |site, spin| SpinSite::new(site, spin).expect("sites 0..3");
    let number = |site, spin| {
        crate::fock::number_operator(&full, mode(site, spin)).matrix().clone()
    };
    // Σ_σ n̂_lσ
    let dot_number =
        |site| number(site, Spin::Up) + number(site, Spin::Down);

    let mut h = DMatrix::<Complex64>::zeros(dim, dim);

    for site in 0..N_SITES {
        if params.eps[site] != 0.0 {
            h += dot_number(site).map(|z| z * Complex64::from(params.eps[site]));
        }
    }

    // tunnel terms, built from the fock-module ladder operators
    let mut add_hopping = |a: usize, b: usize, strength: f64| -> Result<()> {
        if strength == 0.0 {
            return Ok(());
        }
        for spin in Spin::BOTH {
            let cdag = creation_operator(&full, &full, mode(a, spin))?;
            let c = annihilation_operator(&full, &full, mode(b, spin))?;
            let hop = &cdag * &c;
            h += (&hop + hop.adjoint()).map(|z| z * Complex64::from(strength));
        }
        Ok(())
    };
    add_hopping(1, 2, params.gamma12)?;
    if kind == HamiltonianKind::Adder {
        add_hopping(0, 1, params.gamma01)?;
    }

    if params.capacitive != 0.0 {
        let v = Complex64::from(params.capacitive);
        h += (dot_number(0) * dot_number(1)).map(|z| z * v);
        h += (dot_number(1) * dot_number(2)).map(|z| z * v);
    }
    if params.charging != 0.0 {
        let u = Complex64::from(params.charging);
        for site in 0..N_SITES {
            h += (number(site, Spin::Up) * number(site, Spin::Down)).map(|z| z * u);
        }
    }

    // restrict to the requested basis; H conserves (N, Sz) so the
    // projection drops exact zeros only
    let m = if basis.dim() == dim {
        h
    } else {
        DMatrix::from_fn(basis.dim(), basis.dim(), |i, j| {
            let row = basis.states()[i].bits() as usize;
            let col = basis.states()[j].bits() as usize;
            h[(row, col)]
        })
    };

    Ok(HamiltonianMatrix { op: OperatorMatrix::new(basis.clone(), m)?, params: params.clone(), kind })
}

/// Max-norms of [H, N_total] and [H, S_z_total]; both vanish for any
/// Hamiltonian assembled here.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConservedCharges {
    pub number_commutator_max: f64,
    pub sz_commutator_max: f64,
}

pub fn conserved_charges(h: &HamiltonianMatrix) -> ConservedCharges {
    let states = h.basis().states();
    let n: Vec<f64> = states.iter().map(|s| f64::from(s.electron_count())).collect();
    let sz: Vec<f64> = states.iter().map(|s| f64::from(s.total_sz())).collect();
    let commutator_max = |d: &[f64]| {
        let m = h.matrix();
        let mut max = 0.0f64;
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                // [H, D] with diagonal D: element (i,j) is H_ij (d_j - d_i)
                let v = (m[(i, j)] * Complex64::from(d[j] - d[i])).norm();
                if v > max {
                    max = v;
                }
            }
        }
        max
    };
    ConservedCharges {
        number_commutator_max: commutator_max(&n),
        sz_commutator_max: commutator_max(&sz),
    }
}
