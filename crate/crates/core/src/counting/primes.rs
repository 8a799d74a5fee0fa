use super::{CountError, FpOctic, MAX_PRIME};
use crate::arrangement::{singular_strata, Arrangement};
use crate::scalar::Fp;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes in `lo..=hi` by a sieve of Eratosthenes.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let n = hi as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        if i as u64 >= lo {
            out.push(i as u64);
        }
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exclusion {
    pub p: u64,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GoodPrimes {
    pub good: Vec<u64>,
    pub excluded: Vec<Exclusion>,
}

/// Primes in `lo..=hi` where the reduction keeps 8 distinct planes and the
/// same multiset of singular strata multiplicities as over the rationals.
pub fn good_primes(arr: &Arrangement, lo: u64, hi: u64) -> Result<GoodPrimes, CountError> {
    let normals = arr.normals().map_err(|_| CountError::NotSpecialized)?;
    let rational = singular_strata(&normals).signature();
    let mut out = GoodPrimes::default();
    for p in primes_in(lo, hi) {
        if p == 2 || p > MAX_PRIME {
            out.excluded.push(Exclusion {
                p,
                reason: "unsupported prime".into(),
            });
            continue;
        }
        if let Err(e) = FpOctic::from_arrangement(arr, p) {
            let reason = match e {
                CountError::BadReduction { reason, .. } => reason,
                other => other.to_string(),
            };
            out.excluded.push(Exclusion { p, reason });
            continue;
        }
        let reduced: Vec<[Fp; 4]> = normals
            .iter()
            .map(|n| n.clone().map(|c| Fp::from_rat(&c, p).expect("checked by reduction")))
            .collect();
        let modular = singular_strata(&reduced).signature();
        if modular != rational {
            out.excluded.push(Exclusion {
                p,
                reason: format!(
                    "singular strata change: lines {:?} points {:?} become lines {:?} points {:?}",
                    rational.0, rational.1, modular.0, modular.1
                ),
            });
            continue;
        }
        out.good.push(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{integer_planes, running_example};

    #[test]
    fn sieve() {
        assert_eq!(primes_in(3, 20), vec![3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(primes_in(3, 97).len(), 24);
        assert!(primes_in(2, 1).is_empty());
        assert!(is_prime(97) && !is_prime(91));
    }

    #[test]
    fn running_example_excludes_two() {
        let g = good_primes(&running_example(), 2, 20).unwrap();
        assert_eq!(g.excluded[0].p, 2);
        assert!(!g.good.contains(&2));
        assert!(g.good.contains(&5));
    }

    #[test]
    fn collision_excluded() {
        let arr = Arrangement::new(
            "c",
            integer_planes(&[
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 1, 0],
                [0, 0, 0, 1],
                [5, 1, 0, 0],
                [0, 0, 1, 1],
                [1, 1, 1, 1],
                [1, -1, 1, -1],
            ]),
            None,
        )
        .unwrap();
        let g = good_primes(&arr, 3, 11).unwrap();
        assert!(g.excluded.iter().any(|e| e.p == 5 && e.reason.contains("coincide")));
    }
}
