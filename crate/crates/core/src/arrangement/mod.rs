//! Octic arrangements: eight planes in P^3, optionally depending on the
//! family parameters `A`, `B`.

mod line;
mod strata;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, Var, VarSet};
use crate::{QPoly, Rat};

pub use line::{restrict_to_line, LineDivisor, LineRoot};
pub use strata::{
    admissibility, singular_strata, AdmissibilityReport, SingularLine, SingularLocus,
    SingularPoint, Violation,
};

pub const NUM_PLANES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArrangementError {
    #[error("an octic arrangement needs exactly 8 planes, got {0}")]
    WrongPlaneCount(usize),
    #[error("plane {0} has all coefficients zero")]
    DegeneratePlane(String),
    #[error("planes {0} and {1} coincide")]
    DuplicatePlanes(String, String),
    #[error("coefficient '{0}' must be a polynomial in A, B only")]
    NotParameterPolynomial(String),
    #[error("parameters (A, B) = (0, 0) do not define a point of P^1")]
    ZeroParameters,
    #[error("arrangement still depends on A, B; specialize it first")]
    NotSpecialized,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A plane `c0 x + c1 y + c2 z + c3 t = 0`.
///
/// Coefficients are kept with integer, jointly coprime rational coefficients
/// and the first nonzero coefficient has a positive leading term.
#[derive(Clone, Debug, PartialEq)]
pub struct Plane {
    coeffs: [QPoly; 4],
    label: String,
}

impl Plane {
    /// Canonicalize; returns the plane and the scalar `c` with
    /// `input = c * canonical`.
    pub fn new(coeffs: [QPoly; 4], label: Option<String>) -> Result<(Plane, Rat), ArrangementError> {
        let label = label.unwrap_or_else(|| linear_form(&coeffs).to_string());
        for c in &coeffs {
            if !c.vars().is_subset(VarSet::PARAMS) {
                return Err(ArrangementError::NotParameterPolynomial(c.to_string()));
            }
        }
        let Some(first) = coeffs.iter().find(|c| !c.is_zero()) else {
            return Err(ArrangementError::DegeneratePlane(label));
        };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &coeffs {
            for (_, r) in c.terms() {
                num_gcd = num_gcd.gcd(r.numer());
                den_lcm = den_lcm.lcm(r.denom());
            }
        }
        let mut scale = Rat::new(num_gcd, den_lcm);
        if first.leading_coeff().unwrap().is_negative() {
            scale = -scale;
        }
        let inv = scale.recip();
        let coeffs = coeffs.map(|c| c.scale(&inv));
        Ok((Plane { coeffs, label }, scale))
    }

    pub fn coeffs(&self) -> &[QPoly; 4] {
        &self.coeffs
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_parametric(&self) -> bool {
        self.coeffs.iter().any(|c| !c.is_constant())
    }

    pub fn linear_form(&self) -> QPoly {
        linear_form(&self.coeffs)
    }

    /// Rational normal vector when the plane is parameter-free.
    pub fn normal(&self) -> Option<[Rat; 4]> {
        let v: Vec<Rat> = self.coeffs.iter().filter_map(|c| c.as_constant()).collect();
        v.try_into().ok()
    }

    fn specialize(&self, a: &Rat, b: &Rat) -> Result<(Plane, Rat), ArrangementError> {
        let vals = [(Var::A, a.clone()), (Var::B, b.clone())];
        let coeffs = self.coeffs.clone().map(|c| c.eval_vars(&vals));
        Plane::new(coeffs, Some(self.label.clone()))
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.linear_form())
    }
}

/// `c0 x + c1 y + c2 z + c3 t`.
pub fn linear_form(coeffs: &[QPoly; 4]) -> QPoly {
    coeffs
        .iter()
        .zip(Var::COORDS)
        .fold(QPoly::zero(), |acc, (c, v)| &acc + &(c * &QPoly::var(v)))
}

/// Eight planes together with the scalar that makes their product equal to
/// the branch octic as it was entered.
#[derive(Clone, Debug, PartialEq)]
pub struct Arrangement {
    name: String,
    source: Option<String>,
    planes: Vec<Plane>,
    scale: Rat,
}

impl Arrangement {
    pub fn new(
        name: impl Into<String>,
        planes: Vec<[QPoly; 4]>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, ArrangementError> {
        if planes.len() != NUM_PLANES {
            return Err(ArrangementError::WrongPlaneCount(planes.len()));
        }
        let mut labels = labels.map(|l| l.into_iter());
        let mut out = Vec::with_capacity(NUM_PLANES);
        let mut scale = Rat::one();
        for coeffs in planes {
            let label = labels.as_mut().and_then(|it| it.next());
            let (plane, c) = Plane::new(coeffs, label)?;
            scale *= c;
            out.push(plane);
        }
        check_distinct(&out)?;
        Ok(Arrangement {
            name: name.into(),
            source: None,
            planes: out,
            scale,
        })
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = Some(source.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> Option<&str> {
        self.source.as_deref()
    }

    pub fn planes(&self) -> &[Plane] {
        &self.planes
    }

    pub fn labels(&self) -> Vec<&str> {
        self.planes.iter().map(Plane::label).collect()
    }

    /// Scalar factor between the entered octic and the product of the
    /// canonical planes.
    pub fn scale(&self) -> &Rat {
        &self.scale
    }

    pub fn is_parametric(&self) -> bool {
        self.planes.iter().any(Plane::is_parametric)
    }

    /// Substitute `(A, B)`; rejects vanishing or coinciding planes.
    pub fn specialize(&self, a: &Rat, b: &Rat) -> Result<Arrangement, ArrangementError> {
        if a.is_zero() && b.is_zero() {
            return Err(ArrangementError::ZeroParameters);
        }
        let mut scale = self.scale.clone();
        let mut planes = Vec::with_capacity(NUM_PLANES);
        for p in &self.planes {
            let (q, c) = p.specialize(a, b)?;
            scale *= c;
            planes.push(q);
        }
        check_distinct(&planes)?;
        Ok(Arrangement {
            name: self.name.clone(),
            source: self.source.clone(),
            planes,
            scale,
        })
    }

    /// Specialize at `tau = A/B`, i.e. at `(A, B) = (num, den)`.
    pub fn specialize_tau(&self, tau: &Rat) -> Result<Arrangement, ArrangementError> {
        self.specialize(
            &Rat::from_integer(tau.numer().clone()),
            &Rat::from_integer(tau.denom().clone()),
        )
    }

    /// The branch octic `f = scale * prod(planes)`.
    pub fn octic(&self) -> QPoly {
        self.planes
            .iter()
            .fold(QPoly::constant(self.scale.clone()), |acc, p| {
                &acc * &p.linear_form()
            })
    }

    /// Rational normal vectors; requires a parameter-free arrangement.
    pub fn normals(&self) -> Result<Vec<[Rat; 4]>, ArrangementError> {
        self.planes
            .iter()
            .map(|p| p.normal().ok_or(ArrangementError::NotSpecialized))
            .collect()
    }

    /// Integer normal vectors (canonical planes are primitive).
    pub fn integer_normals(&self) -> Result<Vec<[BigInt; 4]>, ArrangementError> {
        Ok(self
            .normals()?
            .into_iter()
            .map(|n| n.map(|c| c.to_integer()))
            .collect())
    }

    pub fn singular_strata(&self) -> Result<SingularLocus<Rat>, ArrangementError> {
        Ok(singular_strata(&self.normals()?))
    }

    pub fn admissibility(&self) -> Result<AdmissibilityReport<Rat>, ArrangementError> {
        Ok(admissibility(&self.singular_strata()?))
    }

    pub fn restrict_to_line(
        &self,
        p: &[Rat; 4],
        q: &[Rat; 4],
    ) -> Result<LineDivisor<Rat>, ArrangementError> {
        Ok(restrict_to_line(&self.normals()?, p, q))
    }

    /// Plane labels for a set of indices.
    pub fn label_set(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.planes[i].label.clone()).collect()
    }
}

fn check_distinct(planes: &[Plane]) -> Result<(), ArrangementError> {
    for (i, p) in planes.iter().enumerate() {
        for q in &planes[i + 1..] {
            if p.coeffs == q.coeffs {
                return Err(ArrangementError::DuplicatePlanes(
                    p.label.clone(),
                    q.label.clone(),
                ));
            }
        }
    }
    Ok(())
}

/// The running test arrangement `x, y, z, t, x+y, z+t, x+y+z+t, x-y+z-t`.
pub fn running_example() -> Arrangement {
    let rows: [[i64; 4]; 8] = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 0, 0],
        [0, 0, 1, 1],
        [1, 1, 1, 1],
        [1, -1, 1, -1],
    ];
    Arrangement::new("R", integer_planes(&rows), None).expect("R is a valid arrangement")
}

/// Helper for tests and examples: planes from integer normal vectors.
pub fn integer_planes(rows: &[[i64; 4]]) -> Vec<[QPoly; 4]> {
    rows.iter()
        .map(|r| r.map(QPoly::from_i64))
        .collect()
}
