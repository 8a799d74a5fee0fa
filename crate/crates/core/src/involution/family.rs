//! One-parameter families `X_tau` with maps `phi_tau : X_tau -> X_g(tau)`.
//! Throughout, `tau = A/B` and `tau0 = p/q` specializes to `(A, B) = (p, q)`.

use num_traits::One;

use super::{involution_normalize, symplectic_lambda, InvolutionError, NormalizedInvolution, WeightedMap};
use crate::algebra::{constant_ratio, AlgebraError, FixedPoints, Mobius, Var, NVARS};
use crate::arrangement::{linear_form, Arrangement};
use crate::{QPoly, QRatFunc, Rat};

/// Above this total degree the intertwining identity is checked at sample
/// parameters instead of symbolically.
pub const SYMBOLIC_DEGREE_BUDGET: u32 = 64;

/// Sample parameters tried, in order, when the symbolic check is too large.
const SAMPLE_TAUS: [(i64, i64); 8] = [(3, 7), (-5, 8), (9, 10), (2, 3), (-7, 9), (5, 4), (-1, 6), (8, 5)];

#[derive(Clone, Debug)]
pub struct FamilyCase {
    pub name: String,
    /// `None` when the arrangement equations are not available.
    pub arrangement: Option<Arrangement>,
    pub map: WeightedMap,
    pub g: Mobius,
    /// `g` as it was written in the input.
    pub g_source: String,
    pub tau0: Rat,
    pub form: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum IntertwiningMode {
    Symbolic,
    Sampled(Vec<Rat>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Intertwining {
    pub mode: IntertwiningMode,
    pub ok: bool,
    /// The ratio found, or where the identity broke.
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub fixed_points: Result<FixedPoints, AlgebraError>,
    /// `g(tau0)`; `None` is the point at infinity.
    pub g_at_tau0: Option<Rat>,
    pub derivative: Result<Rat, AlgebraError>,
    pub lambda: QRatFunc,
    /// `lambda` evaluated at `tau0`.
    pub lambda_at_tau0: Result<Rat, InvolutionError>,
    /// Present only when `tau0` is a fixed point of `g`.
    pub involution: Option<Result<NormalizedInvolution, InvolutionError>>,
    /// Present only when the arrangement is known.
    pub intertwining: Option<Intertwining>,
}

impl FamilyReport {
    pub fn tau0_fixed(&self, tau0: &Rat) -> bool {
        self.g_at_tau0.as_ref() == Some(tau0)
    }

    pub fn derivative_is_minus_one(&self) -> bool {
        matches!(&self.derivative, Ok(d) if *d == -Rat::one())
    }
}

fn homogeneous(tau: &Rat) -> (Rat, Rat) {
    (
        Rat::from_integer(tau.numer().clone()),
        Rat::from_integer(tau.denom().clone()),
    )
}

fn lambda_at(lambda: &QRatFunc, tau: &Rat) -> Result<Rat, InvolutionError> {
    let (a, b) = homogeneous(tau);
    let v = lambda.eval_vars(&[(Var::A, a), (Var::B, b)])?;
    Ok(v.as_constant().expect("lambda depends only on A, B"))
}

pub fn check_family(fc: &FamilyCase) -> FamilyReport {
    let fixed_points = fc.g.fixed_points();
    let g_at_tau0 = fc.g.apply(&fc.tau0);
    let derivative = fc.g.derivative(&fc.tau0);
    let lambda = symplectic_lambda(&fc.map);
    let lambda_at_tau0 = lambda_at(&lambda, &fc.tau0);
    let involution = (g_at_tau0.as_ref() == Some(&fc.tau0)).then(|| {
        fc.map
            .specialize_tau(&fc.tau0)
            .and_then(|w| w.rational_matrix())
            .and_then(|m| involution_normalize(&m))
    });
    let intertwining = fc.arrangement.as_ref().map(|arr| intertwining(arr, fc));
    FamilyReport {
        fixed_points,
        g_at_tau0,
        derivative,
        lambda,
        lambda_at_tau0,
        involution,
        intertwining,
    }
}

/// Planes of the family at `g(tau)`: substitute `A -> aA + bB`,
/// `B -> cA + dB`.
fn planes_at_g(arr: &Arrangement, g: &Mobius) -> Vec<[QPoly; 4]> {
    let a = QPoly::var(Var::A);
    let b = QPoly::var(Var::B);
    let lin = |p: &Rat, q: &Rat| &a.scale(p) + &b.scale(q);
    let mut images: [Option<QPoly>; NVARS] = Default::default();
    images[Var::A.index()] = Some(lin(&g.a, &g.b));
    images[Var::B.index()] = Some(lin(&g.c, &g.d));
    arr.planes()
        .iter()
        .map(|p| p.coeffs().clone().map(|c| c.compose(&images)))
        .collect()
}

fn intertwining(arr: &Arrangement, fc: &FamilyCase) -> Intertwining {
    let m = fc.map.matrix();
    let pulled: Vec<[QPoly; 4]> = planes_at_g(arr, &fc.g)
        .iter()
        .map(|h| m.pull_back(h))
        .collect();
    let degree: u32 = pulled
        .iter()
        .map(|h| 1 + h.iter().filter_map(QPoly::total_degree).max().unwrap_or(0))
        .sum();
    if degree > SYMBOLIC_DEGREE_BUDGET {
        return sampled(arr, fc);
    }
    let composed = pulled
        .iter()
        .fold(QPoly::constant(arr.scale().clone()), |acc, h| &acc * &linear_form(h));
    let f = arr.octic();
    let c2 = fc.map.u_coeff() * fc.map.u_coeff();
    match constant_ratio(&f, &composed) {
        Ok(mu) if mu == QRatFunc::from_poly(c2.clone()) => Intertwining {
            mode: IntertwiningMode::Symbolic,
            ok: true,
            detail: format!("f_g(tau)(M x) = c_u^2 f_tau(x) with c_u^2 = {c2}"),
        },
        Ok(mu) => Intertwining {
            mode: IntertwiningMode::Symbolic,
            ok: false,
            detail: format!("f_g(tau)(M x) = ({mu}) f_tau(x), but c_u^2 = {c2}"),
        },
        Err(_) => {
            let residual = &composed - &(&c2 * &f);
            Intertwining {
                mode: IntertwiningMode::Symbolic,
                ok: false,
                detail: format!("not proportional; residual f_g(tau)(M x) - c_u^2 f_tau = {residual}"),
            }
        }
    }
}

/// Check the identity at `tau0` and three further parameters.
fn sampled(arr: &Arrangement, fc: &FamilyCase) -> Intertwining {
    let mut taus = vec![fc.tau0.clone()];
    taus.extend(
        SAMPLE_TAUS
            .iter()
            .map(|&(p, q)| Rat::new(p.into(), q.into()))
            .filter(|t| *t != fc.tau0),
    );
    let mut used = Vec::new();
    for tau in taus {
        if used.len() == 4 {
            break;
        }
        match check_at(arr, fc, &tau) {
            None => continue,
            Some(Ok(())) => used.push(tau),
            Some(Err(msg)) => {
                used.push(tau.clone());
                return Intertwining {
                    mode: IntertwiningMode::Sampled(used),
                    ok: false,
                    detail: format!("at tau = {tau}: {msg}"),
                };
            }
        }
    }
    let ok = used.len() == 4;
    Intertwining {
        detail: if ok {
            "f_g(tau)(M x) = c_u^2 f_tau(x) at every sample".into()
        } else {
            format!("only {} usable sample parameters", used.len())
        },
        mode: IntertwiningMode::Sampled(used),
        ok,
    }
}

/// `None` when the sample is degenerate (a plane vanishes, the map drops
/// rank, or `g(tau)` is infinite).
fn check_at(arr: &Arrangement, fc: &FamilyCase, tau: &Rat) -> Option<Result<(), String>> {
    let (a, b) = homogeneous(tau);
    let src = arr.specialize(&a, &b).ok()?;
    let (ga, gb) = fc.g.apply_homogeneous(&a, &b);
    let dst = arr.specialize(&ga, &gb).ok()?;
    let w = fc.map.specialize(&a, &b).ok()?;
    let composed = super::pulled_back_octic(&dst, w.matrix());
    let c2 = w.u_coeff() * w.u_coeff();
    let f = src.octic();
    if composed == &c2 * &f {
        Some(Ok(()))
    } else {
        match constant_ratio(&f, &composed) {
            Ok(mu) => Some(Err(format!("ratio {mu}, c_u^2 = {c2}"))),
            Err(_) => Some(Err("not proportional".into())),
        }
    }
}
