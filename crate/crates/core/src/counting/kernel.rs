use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{primes::is_prime, CountError, MAX_PRIME};
use crate::arrangement::Arrangement;
use crate::scalar::Fp;

/// `p^3 + p^2 + p + 1`, the number of points of `P^3(F_p)`.
pub fn projective_size(p: u64) -> u64 {
    ((p + 1) * p + 1) * p + 1
}

/// Quadratic character modulo `p`, tabulated once.
#[derive(Clone, Debug)]
pub struct QuadChar {
    p: u64,
    table: Vec<i8>,
}

impl QuadChar {
    pub fn new(p: u64) -> Self {
        let mut table = vec![-1i8; p as usize];
        table[0] = 0;
        for x in 1..=p / 2 {
            table[(x * x % p) as usize] = 1;
        }
        QuadChar { p, table }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn chi(&self, a: u64) -> i8 {
        self.table[(a % self.p) as usize]
    }
}

/// Legendre symbol `(a / p)`; builds a table, so prefer [`QuadChar`] in loops.
pub fn quad_char(a: i64, p: u64) -> i8 {
    QuadChar::new(p).chi(a.rem_euclid(p as i64) as u64)
}

/// The branch octic reduced mod `p`, as `scale * prod(forms)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpOctic {
    p: u64,
    forms: Vec<[u64; 4]>,
    scale: u64,
}

fn check_prime(p: u64) -> Result<(), CountError> {
    if p == 2 || p > MAX_PRIME || !is_prime(p) {
        return Err(CountError::UnsupportedPrime(p));
    }
    Ok(())
}

fn reduce(c: i64, p: u64) -> u64 {
    c.rem_euclid(p as i64) as u64
}

impl FpOctic {
    /// Reduce a specialized arrangement; requires 8 distinct nonzero planes
    /// and a scale that is a unit mod `p`.
    pub fn from_arrangement(arr: &Arrangement, p: u64) -> Result<Self, CountError> {
        check_prime(p)?;
        let normals = arr.normals().map_err(|_| CountError::NotSpecialized)?;
        let bad = |reason: String| CountError::BadReduction { p, reason };
        let mut forms: Vec<[u64; 4]> = Vec::with_capacity(normals.len());
        let mut projective: Vec<[Fp; 4]> = Vec::with_capacity(normals.len());
        let labels = arr.labels();
        for (i, n) in normals.iter().enumerate() {
            let mut v = [Fp::new(0, p); 4];
            for (j, c) in n.iter().enumerate() {
                v[j] = Fp::from_rat(c, p).ok_or_else(|| bad(format!("plane {} has a denominator divisible by p", labels[i])))?;
            }
            let Some(lead) = v.iter().find(|c| c.value() != 0).copied() else {
                return Err(bad(format!("plane {} vanishes", labels[i])));
            };
            let inv = lead.inverse().expect("nonzero residue");
            let normalized = v.map(|c| c * inv);
            if let Some(j) = projective.iter().position(|w| *w == normalized) {
                return Err(bad(format!("planes {} and {} coincide", labels[j], labels[i])));
            }
            projective.push(normalized);
            forms.push(v.map(|c| c.value() as u64));
        }
        let scale = Fp::from_rat(arr.scale(), p)
            .filter(|s| s.value() != 0)
            .ok_or_else(|| bad(format!("scalar {} is not a unit", arr.scale())))?;
        Ok(FpOctic {
            p,
            forms,
            scale: scale.value() as u64,
        })
    }

    /// Any product of linear forms, without the good-reduction checks; used
    /// for degenerate test octics such as `x^8`.
    pub fn from_forms(p: u64, forms: &[[i64; 4]], scale: i64) -> Result<Self, CountError> {
        check_prime(p)?;
        Ok(FpOctic {
            p,
            forms: forms.iter().map(|f| f.map(|c| reduce(c, p))).collect(),
            scale: reduce(scale, p),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn forms(&self) -> &[[u64; 4]] {
        &self.forms
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// `f(x)` mod `p` at a single point.
    pub fn eval(&self, x: &[u64; 4]) -> u64 {
        let p = self.p;
        self.forms.iter().fold(self.scale % p, |acc, f| {
            let v = (0..4).fold(0, |s, j| (s + f[j] * (x[j] % p)) % p);
            acc * v % p
        })
    }
}

#[derive(Clone, Debug)]
pub struct CountResult {
    pub p: u64,
    /// `#{(x, u) : u^2 = f(x)}` with `x` in `P^3(F_p)`.
    pub n_points: i64,
    pub character_sum: i64,
    pub zero_count: u64,
    pub elapsed: Duration,
}

impl CountResult {
    /// Equality of the counted integers, ignoring timing.
    pub fn same_counts(&self, other: &CountResult) -> bool {
        (self.p, self.n_points, self.character_sum, self.zero_count)
            == (other.p, other.n_points, other.character_sum, other.zero_count)
    }
}

#[derive(Clone, Copy, Default)]
struct Tally {
    chi: i64,
    zeros: u64,
    visited: u64,
}

impl std::ops::Add for Tally {
    type Output = Tally;
    fn add(self, o: Tally) -> Tally {
        Tally {
            chi: self.chi + o.chi,
            zeros: self.zeros + o.zeros,
            visited: self.visited + o.visited,
        }
    }
}

struct Kernel<'a> {
    oct: &'a FpOctic,
    chi: &'a QuadChar,
}

impl Kernel<'_> {
    #[inline]
    fn point(&self, vals: &[u64], t: &mut Tally) {
        let p = self.oct.p;
        let mut prod = self.oct.scale;
        for &v in vals {
            prod = prod * v % p;
        }
        let c = self.chi.chi(prod);
        t.chi += c as i64;
        t.zeros += (c == 0) as u64;
        t.visited += 1;
    }

    /// Walk `x_0 = 0 .. p-1` from the values at `x_0 = 0`; each form moves by
    /// its `x_0` coefficient per step.
    #[inline]
    fn row(&self, vals: &mut [u64], t: &mut Tally) {
        let p = self.oct.p;
        for _ in 0..p {
            self.point(vals, t);
            for (v, f) in vals.iter_mut().zip(&self.oct.forms) {
                *v += f[0];
                if *v >= p {
                    *v -= p;
                }
            }
        }
    }

    /// Points of chart `k` (`x_k = 1`, later coordinates 0) whose coordinate
    /// `x_{k-1}` equals `outer`.
    fn slice(&self, k: usize, outer: u64) -> Tally {
        let p = self.oct.p;
        let forms = &self.oct.forms;
        let mut t = Tally::default();
        let mut vals: Vec<u64> = forms.iter().map(|f| (f[k] + f[k - 1] * outer) % p).collect();
        match k {
            1 => self.point(&vals, &mut t),
            2 => self.row(&mut vals, &mut t),
            3 => {
                for x1 in 0..p {
                    let mut row: Vec<u64> = vals
                        .iter()
                        .zip(forms)
                        .map(|(v, f)| (v + f[1] * x1) % p)
                        .collect();
                    self.row(&mut row, &mut t);
                }
                vals.clear();
            }
            _ => unreachable!("charts are 1..=3 here"),
        }
        t
    }
}

/// Count with `jobs` worker threads (`0` uses rayon's default). The result
/// does not depend on `jobs`.
pub fn count_double_cover(oct: &FpOctic, jobs: usize) -> Result<CountResult, CountError> {
    let start = Instant::now();
    let p = oct.p;
    let chi = QuadChar::new(p);
    let kernel = Kernel { oct, chi: &chi };

    // chart 0 is the single point (1:0:0:0)
    let mut first = Tally::default();
    let vals: Vec<u64> = oct.forms.iter().map(|f| f[0]).collect();
    kernel.point(&vals, &mut first);

    let work: Vec<(usize, u64)> = (1..=3).flat_map(|k| (0..p).map(move |o| (k, o))).collect();
    let total = if jobs == 1 {
        work.iter().fold(first, |acc, &(k, o)| acc + kernel.slice(k, o))
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CountError::ThreadPool(e.to_string()))?;
        pool.install(|| {
            work.par_iter()
                .map(|&(k, o)| kernel.slice(k, o))
                .reduce(Tally::default, |a, b| a + b)
        }) + first
    };
    assert_eq!(total.visited, projective_size(p), "charts must partition P^3(F_{p})");

    Ok(CountResult {
        p,
        n_points: projective_size(p) as i64 + total.chi,
        character_sum: total.chi,
        zero_count: total.zeros,
        elapsed: start.elapsed(),
    })
}

/// Raw kernel entry point over arbitrary linear forms.
pub fn count_forms(p: u64, forms: &[[i64; 4]], scale: i64, jobs: usize) -> Result<CountResult, CountError> {
    count_double_cover(&FpOctic::from_forms(p, forms, scale)?, jobs)
}
