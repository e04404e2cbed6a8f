//! Budgeted search for a point of a parametrized family satisfying a predicate.
//!
//! Candidates are parameter vectors `t ∈ k^m`. Over a small finite field every vector
//! is tried. Otherwise the order is: zero, standard basis vectors, then either a grid
//! `{0..=d}^m` (when the predicate is the non-vanishing of a polynomial of degree at most
//! `d`, so a miss on the whole grid proves the polynomial is zero), or all `{0, ±1}`
//! vectors followed by seeded random draws.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Scalar, ScalarField};

/// Shared search budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    pub random_draws: usize,
    /// Largest candidate count enumerated exhaustively (finite fields or grids).
    pub exhaustive_limit: u64,
    /// Largest family dimension for the `{0, ±1}` ladder.
    pub ladder_max_dim: usize,
    /// Random rational coordinates are drawn from `-random_range..=random_range`.
    pub random_range: i64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            random_draws: 1000,
            exhaustive_limit: 1_000_000,
            ladder_max_dim: 12,
            random_range: 16,
        }
    }
}

impl SearchConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_budget(mut self, draws: usize) -> Self {
        self.random_draws = draws;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    Exhaustive,
    Ladder,
    Grid,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AbsenceProof {
    /// Every point of the finite family was tried.
    Exhaustive,
    /// A polynomial of degree at most `degree` vanished on a grid of side `degree + 1`.
    PolynomialGrid { degree: usize },
    /// The constraints were solved in closed form and have no solution.
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found {
        witness: T,
        params: Vec<Scalar>,
        stage: Stage,
        tried: usize,
    },
    ProvedAbsent {
        proof: AbsenceProof,
        tried: usize,
    },
    NotFoundWithinBudget {
        tried: usize,
    },
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self {
            SearchOutcome::Found { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found { .. })
    }

    pub fn is_proved_absent(&self) -> bool {
        matches!(self, SearchOutcome::ProvedAbsent { .. })
    }

    pub fn tried(&self) -> usize {
        match self {
            SearchOutcome::Found { tried, .. }
            | SearchOutcome::ProvedAbsent { tried, .. }
            | SearchOutcome::NotFoundWithinBudget { tried } => *tried,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found {
                witness,
                params,
                stage,
                tried,
            } => SearchOutcome::Found {
                witness: f(witness),
                params,
                stage,
                tried,
            },
            SearchOutcome::ProvedAbsent { proof, tried } => {
                SearchOutcome::ProvedAbsent { proof, tried }
            }
            SearchOutcome::NotFoundWithinBudget { tried } => {
                SearchOutcome::NotFoundWithinBudget { tried }
            }
        }
    }
}

fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Calls `digits` on every vector in `{0..radix}^m`, last coordinate fastest.
fn for_each_digits(m: usize, radix: u64, mut visit: impl FnMut(&[u64]) -> bool) -> bool {
    let mut digits = alloc::vec![0u64; m];
    loop {
        if visit(&digits) {
            return true;
        }
        let mut pos = m;
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < radix {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Searches `k^m` for parameters where `test` returns a witness.
///
/// `degree_bound` asserts that `test` succeeds exactly where some polynomial of at most
/// that degree is nonzero; it enables proofs of absence over infinite fields.
pub fn search_family<T>(
    field: ScalarField,
    m: usize,
    config: &SearchConfig,
    degree_bound: Option<usize>,
    mut test: impl FnMut(&[Scalar]) -> Option<T>,
) -> SearchOutcome<T> {
    let mut tried = 0usize;
    let mut attempt = |params: Vec<Scalar>, stage: Stage, tried: &mut usize| {
        *tried += 1;
        test(&params).map(|witness| (witness, params, stage))
    };
    macro_rules! hit {
        ($r:expr) => {
            if let Some((witness, params, stage)) = $r {
                return SearchOutcome::Found {
                    witness,
                    params,
                    stage,
                    tried,
                };
            }
        };
    }

    if let Some(order) = field.order() {
        if checked_pow(order, m).is_some_and(|n| n <= config.exhaustive_limit) {
            let mut result = None;
            for_each_digits(m, order, |digits| {
                let params = digits.iter().map(|&d| field.int(d as i64)).collect();
                result = attempt(params, Stage::Exhaustive, &mut tried);
                result.is_some()
            });
            hit!(result);
            return SearchOutcome::ProvedAbsent {
                proof: AbsenceProof::Exhaustive,
                tried,
            };
        }
    }

    hit!(attempt(alloc::vec![field.zero(); m], Stage::Ladder, &mut tried));
    for i in 0..m {
        let mut params = alloc::vec![field.zero(); m];
        params[i] = field.one();
        hit!(attempt(params, Stage::Ladder, &mut tried));
    }

    if let Some(d) = degree_bound {
        let big_enough = field.order().is_none_or(|q| q > d as u64);
        let side = d as u64 + 1;
        if big_enough && checked_pow(side, m).is_some_and(|n| n <= config.exhaustive_limit) {
            let mut result = None;
            for_each_digits(m, side, |digits| {
                if digits.iter().filter(|&&x| x != 0).count() <= 1
                    && digits.iter().all(|&x| x <= 1)
                {
                    return false;
                }
                let params = digits.iter().map(|&x| field.int(x as i64)).collect();
                result = attempt(params, Stage::Grid, &mut tried);
                result.is_some()
            });
            hit!(result);
            return SearchOutcome::ProvedAbsent {
                proof: AbsenceProof::PolynomialGrid { degree: d },
                tried,
            };
        }
    }

    if m <= config.ladder_max_dim
        && checked_pow(3, m).is_some_and(|n| n <= config.exhaustive_limit)
    {
        let mut result = None;
        for_each_digits(m, 3, |digits| {
            let nonzero = digits.iter().filter(|&&x| x != 0).count();
            if nonzero == 0 || (nonzero == 1 && digits.iter().all(|&x| x <= 1)) {
                return false;
            }
            let params = digits
                .iter()
                .map(|&x| match x {
                    0 => field.zero(),
                    1 => field.one(),
                    _ => field.int(-1),
                })
                .collect();
            result = attempt(params, Stage::Ladder, &mut tried);
            result.is_some()
        });
        hit!(result);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.random_draws {
        let params = (0..m)
            .map(|_| match field {
                ScalarField::Prime(p) => field.int(rng.gen_range(0..p as i64)),
                ScalarField::Rationals => {
                    field.int(rng.gen_range(-config.random_range..=config.random_range))
                }
            })
            .collect();
        hit!(attempt(params, Stage::Random, &mut tried));
    }
    SearchOutcome::NotFoundWithinBudget { tried }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: ScalarField = ScalarField::Rationals;

    #[test]
    fn exhaustive_over_small_field() {
        let f3 = ScalarField::prime(3).unwrap();
        let out: SearchOutcome<()> = search_family(f3, 3, &SearchConfig::default(), None, |_| None);
        assert_eq!(
            out,
            SearchOutcome::ProvedAbsent {
                proof: AbsenceProof::Exhaustive,
                tried: 27
            }
        );
        let out = search_family(f3, 2, &SearchConfig::default(), None, |t| {
            (t[0] == f3.int(2) && t[1] == f3.int(1)).then_some(())
        });
        assert!(out.is_found());
    }

    #[test]
    fn grid_proves_vanishing_polynomial() {
        // t0 * t1 - t1 * t0 is identically zero
        let out: SearchOutcome<()> = search_family(Q, 2, &SearchConfig::default(), Some(2), |t| {
            let v = &(&t[0] * &t[1]) - &(&t[1] * &t[0]);
            (!v.is_zero()).then_some(())
        });
        assert_eq!(
            out,
            SearchOutcome::ProvedAbsent {
                proof: AbsenceProof::PolynomialGrid { degree: 2 },
                tried: 9
            }
        );
    }

    #[test]
    fn random_stage_is_reproducible() {
        let run = |seed| {
            search_family(Q, 1, &SearchConfig::default().with_seed(seed), None, |t| {
                (t[0] == Q.int(7)).then_some(())
            })
        };
        assert_eq!(run(5), run(5));
        let out: SearchOutcome<()> =
            search_family(Q, 1, &SearchConfig::default().with_budget(3), None, |_| None);
        assert_eq!(out, SearchOutcome::NotFoundWithinBudget { tried: 6 });
    }
}
