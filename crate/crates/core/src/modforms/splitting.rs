use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CoefficientTable, ModformsError};
use crate::counting::CachedCount;
use crate::Rat;

pub const MIN_PRIMES: usize = 6;
const FIT_PRIMES: usize = 4;

/// Recorded in every report: what makes `D(p)` a single cubic.
pub const SPLITTING_ASSUMPTION: &str = "the counts are of the singular double cover; if every singular stratum \
is defined over Q and has the same type modulo each prime, the resolution adds a fixed integer polynomial in p, \
so D(p) = #X_sing(F_p) + a_p + p b_p must equal one monic cubic Q(p)";

#[derive(Clone, Debug, PartialEq)]
pub struct SplittingReport {
    /// Primes with a count and both coefficients, ascending.
    pub primes: Vec<u64>,
    pub discrepancies: Vec<(u64, BigInt)>,
    /// Coefficients of `Q`, constant term first.
    pub q: [Rat; 4],
    pub integer_fit: bool,
    pub monic: bool,
    /// `D(p) - Q(p)` at the primes not used for the fit.
    pub residuals: Vec<(u64, Rat)>,
    /// Primes dropped for missing data.
    pub skipped: Vec<u64>,
    pub pass: bool,
}

impl SplittingReport {
    pub fn fit_primes(&self) -> &[u64] {
        &self.primes[..FIT_PRIMES]
    }

    /// `Q` written as a polynomial in `p`.
    pub fn q_string(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.q.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "p".into(),
                _ => format!("p^{k}"),
            };
            let mag = if c < &Rat::zero() { -c.clone() } else { c.clone() };
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else if mag.is_integer() {
                format!("{mag}{mono}")
            } else {
                format!("({mag}){mono}")
            };
            let sign = if c < &Rat::zero() { "-" } else { "+" };
            if terms.is_empty() {
                terms.push(if sign == "-" { format!("-{body}") } else { body });
            } else {
                terms.push(format!("{sign} {body}"));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" ")
        }
    }

    pub fn failing_primes(&self) -> Vec<u64> {
        self.residuals
            .iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(p, _)| *p)
            .collect()
    }
}

fn eval(q: &[Rat; 4], p: u64) -> Rat {
    let x = Rat::from_integer(p.into());
    q.iter().rev().fold(Rat::zero(), |acc, c| acc * &x + c)
}

/// Coefficients of the cubic through four points, by Lagrange interpolation.
fn interpolate(points: &[(u64, BigInt)]) -> [Rat; 4] {
    let mut q = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        let mut basis = vec![Rat::one()];
        let mut denom = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj = Rat::from_integer((*xj).into());
            let mut next = vec![Rat::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xj;
            }
            basis = next;
            denom *= Rat::from_integer((*xi).into()) - xj;
        }
        let scale = Rat::from_integer(yi.clone()) / denom;
        for (k, c) in basis.iter().enumerate() {
            q[k] += c * &scale;
        }
    }
    q
}

/// Fit `D(p) = n(p) + a_p + p b_p` by a cubic through the four smallest
/// primes and test it at the rest.
pub fn verify_splitting(
    counts: &[CachedCount],
    f4: &CoefficientTable,
    f2: &CoefficientTable,
) -> Result<SplittingReport, ModformsError> {
    let mut sorted = counts.to_vec();
    sorted.sort_by_key(|c| c.p);
    sorted.dedup_by_key(|c| c.p);
    let mut discrepancies = Vec::new();
    let mut skipped = Vec::new();
    for c in &sorted {
        match (f4.get(c.p), f2.get(c.p)) {
            (Some(a), Some(b)) => {
                let d = BigInt::from(c.n_points) + BigInt::from(a) + BigInt::from(c.p) * BigInt::from(b);
                discrepancies.push((c.p, d));
            }
            _ => skipped.push(c.p),
        }
    }
    if discrepancies.len() < MIN_PRIMES {
        return Err(ModformsError::InsufficientPrimes {
            have: discrepancies.len(),
            need: MIN_PRIMES,
        });
    }
    let q = interpolate(&discrepancies[..FIT_PRIMES]);
    let integer_fit = q.iter().all(Rat::is_integer);
    let monic = q[3].is_one();
    let residuals: Vec<(u64, Rat)> = discrepancies[FIT_PRIMES..]
        .iter()
        .map(|(p, d)| (*p, Rat::from_integer(d.clone()) - eval(&q, *p)))
        .collect();
    let pass = integer_fit && monic && residuals.iter().all(|(_, r)| r.is_zero());
    Ok(SplittingReport {
        primes: discrepancies.iter().map(|(p, _)| *p).collect(),
        discrepancies,
        q,
        integer_fit,
        monic,
        residuals,
        skipped,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(label: &str, w: u32, vals: &[(u64, i64)]) -> CoefficientTable {
        let mut t = CoefficientTable::new(label, w, 1);
        t.coeffs.extend(vals.iter().copied());
        t
    }

    fn counts_for(q: impl Fn(i64) -> i64, primes: &[u64], f4: &CoefficientTable, f2: &CoefficientTable) -> Vec<CachedCount> {
        primes
            .iter()
            .map(|&p| {
                let pi = p as i64;
                CachedCount {
                    p,
                    n_points: q(pi) - f4.get(p).unwrap() - pi * f2.get(p).unwrap(),
                    character_sum: 0,
                }
            })
            .collect()
    }

    #[test]
    fn synthetic_cubic_recovered() {
        let primes = [3, 5, 7, 11, 13, 17];
        let f4 = table("f4", 4, &[(3, 0), (5, 22), (7, 0), (11, 0), (13, -18), (17, -94)]);
        let f2 = table("f2", 2, &[(3, 0), (5, -2), (7, 0), (11, 0), (13, 6), (17, 2)]);
        let counts = counts_for(|p| p * p * p + 5 * p + 3, &primes, &f4, &f2);
        let rep = verify_splitting(&counts, &f4, &f2).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.q_string(), "p^3 + 5p + 3");
        assert_eq!(rep.fit_primes(), &[3, 5, 7, 11]);

        let mut bumped = counts.clone();
        bumped[5].n_points += 1;
        let rep = verify_splitting(&bumped, &f4, &f2).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.residuals, vec![(13, Rat::zero()), (17, Rat::one())]);
    }

    #[test]
    fn non_monic_fails() {
        let primes = [3, 5, 7, 11, 13, 17];
        let zero: Vec<(u64, i64)> = primes.iter().map(|&p| (p, 0)).collect();
        let f4 = table("f4", 4, &zero);
        let f2 = table("f2", 2, &zero);
        let counts = counts_for(|p| 2 * p * p * p, &primes, &f4, &f2);
        let rep = verify_splitting(&counts, &f4, &f2).unwrap();
        assert!(rep.integer_fit && !rep.monic && !rep.pass);
        let counts = counts_for(|p| p * (p - 1) / 2, &primes, &f4, &f2);
        let rep = verify_splitting(&counts, &f4, &f2).unwrap();
        assert!(!rep.integer_fit && !rep.pass);
    }

    #[test]
    fn too_few_primes() {
        let f = table("f", 4, &[(3, 0), (5, 0)]);
        let counts = vec![CachedCount { p: 3, n_points: 1, character_sum: 0 }];
        assert_eq!(
            verify_splitting(&counts, &f, &f),
            Err(ModformsError::InsufficientPrimes { have: 1, need: MIN_PRIMES })
        );
    }
}
