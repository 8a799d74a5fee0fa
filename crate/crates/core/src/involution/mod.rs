//! Weighted projective self-maps of the double octic `u^2 = f(x, y, z, t)`.
//!
//! A map acts by a 4x4 matrix on `(x, y, z, t)` and by a scalar on `u`,
//! which has weight 4. Two maps are equivalent modulo `(M, c) ~ (rM, r^4 c)`.

mod certificate;
mod family;
mod fixed;
mod prop1;
mod twist;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::rational::rational_sqrt;
use crate::algebra::{AlgebraError, Var, NVARS};
use crate::arrangement::{Arrangement, ArrangementError};
use crate::{PMatrix, QMatrix, QPoly, QRatFunc, Rat};

pub use certificate::{certify, checks, conclude, Certificate, CheckStatus, Conclusion, Verdict};
pub use family::{check_family, FamilyCase, FamilyReport, Intertwining, IntertwiningMode, SYMBOLIC_DEGREE_BUDGET};
pub use fixed::{fixed_locus, is_eigenvector, FixedLocus};
pub use prop1::{check_proposition1, FixedLineCheck, FixedLineStatus, FourfoldCheck, Prop1Report};
pub use twist::{classify_twist, TwistClass};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InvolutionError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("u-coefficient is zero")]
    ZeroUCoefficient,
    #[error("map is not an involution: M^2 = {0}")]
    NotInvolution(String),
    #[error("M^2 = {0} * I, and {0} is not a rational square")]
    IrrationalNormalization(Rat),
    #[error("map is +-identity; its fixed locus is all of P^3")]
    IdentityMap,
    #[error("octic is not preserved: {0}")]
    NotPreserved(String),
    #[error("map still depends on A, B; specialize it first")]
    NotSpecialized,
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `(x, y, z, t, u) -> (M (x, y, z, t), c_u u)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedMap {
    matrix: PMatrix,
    u_coeff: QPoly,
}

impl WeightedMap {
    pub fn new(matrix: PMatrix, u_coeff: QPoly) -> Result<Self, InvolutionError> {
        if matrix.det().is_zero() {
            return Err(InvolutionError::SingularMatrix);
        }
        if u_coeff.is_zero() {
            return Err(InvolutionError::ZeroUCoefficient);
        }
        Ok(WeightedMap { matrix, u_coeff })
    }

    pub fn matrix(&self) -> &PMatrix {
        &self.matrix
    }

    pub fn u_coeff(&self) -> &QPoly {
        &self.u_coeff
    }

    pub fn is_parametric(&self) -> bool {
        !self.u_coeff.is_constant() || self.matrix.rows().iter().flatten().any(|e| !e.is_constant())
    }

    /// Evaluate at `(A, B)`; the result must stay invertible.
    pub fn specialize(&self, a: &Rat, b: &Rat) -> Result<WeightedMap, InvolutionError> {
        let vals = [(Var::A, a.clone()), (Var::B, b.clone())];
        WeightedMap::new(
            self.matrix.map(|e| e.eval_vars(&vals)),
            self.u_coeff.eval_vars(&vals),
        )
    }

    pub fn specialize_tau(&self, tau: &Rat) -> Result<WeightedMap, InvolutionError> {
        self.specialize(
            &Rat::from_integer(tau.numer().clone()),
            &Rat::from_integer(tau.denom().clone()),
        )
    }

    pub fn rational_matrix(&self) -> Result<QMatrix, InvolutionError> {
        self.matrix
            .try_map(|e| e.as_constant().ok_or(InvolutionError::NotSpecialized))
    }

    pub fn rational_u(&self) -> Result<Rat, InvolutionError> {
        self.u_coeff.as_constant().ok_or(InvolutionError::NotSpecialized)
    }

    /// Weighted rescaling `(r M, r^4 c_u)`.
    pub fn rescale(&self, r: &Rat) -> WeightedMap {
        let rp = QPoly::constant(r.clone());
        WeightedMap {
            matrix: self.matrix.scale(&rp),
            u_coeff: self.u_coeff.scale(&(r * r * r * r)),
        }
    }
}

/// `lambda = det(M) / c_u`: the scalar by which the lift multiplies the
/// holomorphic 3-form. The lift is symplectic iff `lambda = 1`.
pub fn symplectic_lambda(w: &WeightedMap) -> QRatFunc {
    QRatFunc::new(w.matrix.det(), w.u_coeff.clone()).expect("c_u is nonzero")
}

/// Result of normalizing a rational matrix with `M^2 = c I`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedInvolution {
    /// `M / r` with `r^2 = c`; squares to the identity.
    pub matrix: QMatrix,
    /// The other normalization, `-M / r`.
    pub negated: QMatrix,
    pub square_scalar: Rat,
    pub root: Rat,
}

pub fn involution_normalize(m: &QMatrix) -> Result<NormalizedInvolution, InvolutionError> {
    let sq = m.mul(m);
    let c = match sq.as_scalar() {
        Some(c) if !c.is_zero() => c,
        _ => return Err(InvolutionError::NotInvolution(sq.to_string())),
    };
    let r = rational_sqrt(&c).ok_or_else(|| InvolutionError::IrrationalNormalization(c.clone()))?;
    let normalized = m.scale(&r.recip());
    debug_assert!(normalized.mul(&normalized).is_identity());
    Ok(NormalizedInvolution {
        negated: normalized.scale(&-Rat::one()),
        matrix: normalized,
        square_scalar: c,
        root: r,
    })
}

/// `f(M x)`: substitute the rows of `M` for the coordinates.
pub fn compose_linear(f: &QPoly, m: &PMatrix) -> QPoly {
    let mut images: [Option<QPoly>; NVARS] = Default::default();
    for (i, v) in Var::COORDS.iter().enumerate() {
        let row = &m.rows()[i];
        let image = row
            .iter()
            .zip(Var::COORDS)
            .fold(QPoly::zero(), |acc, (c, w)| &acc + &(c * &QPoly::var(w)));
        images[v.index()] = Some(image);
    }
    f.compose(&images)
}

/// The octic of `target` pulled back along `M`, built plane by plane.
pub fn pulled_back_octic(target: &Arrangement, m: &PMatrix) -> QPoly {
    target
        .planes()
        .iter()
        .fold(QPoly::constant(target.scale().clone()), |acc, p| {
            let pulled = m.pull_back(p.coeffs());
            &acc * &crate::arrangement::linear_form(&pulled)
        })
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvarianceReport {
    /// `f(M x) = kappa f(x)`.
    pub kappa: QRatFunc,
    /// `kappa = c_u^2`, when a u-coefficient was supplied.
    pub u_consistent: Option<bool>,
}

/// Check that `M` maps the branch octic to a multiple of itself.
pub fn octic_invariance(
    arr: &Arrangement,
    m: &PMatrix,
    u_coeff: Option<&QPoly>,
) -> Result<InvarianceReport, InvolutionError> {
    let f = arr.octic();
    let composed = pulled_back_octic(arr, m);
    let kappa = crate::algebra::constant_ratio(&f, &composed).map_err(|e| match e {
        AlgebraError::NotProportional => {
            InvolutionError::NotPreserved(format!("f(Mx) is not a multiple of f = {f}"))
        }
        other => other.into(),
    })?;
    let u_consistent = u_coeff.map(|c| kappa == QRatFunc::from_poly(c * c));
    Ok(InvarianceReport {
        kappa,
        u_consistent,
    })
}
