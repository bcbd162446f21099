//! Ground-truth character evaluators.
//!
//! Three independent routes to `χ^μ(σ)`:
//!
//! * [`character_mn`]: the Murnaghan–Nakayama recursion, peeling one cycle at
//!   a time by removing border strips;
//! * [`character_frobenius_transposition`]: Frobenius's closed formula on a
//!   transposition;
//! * [`character_recpart`]: the expansion of `χ^{(n−k,λ)}(σ)` over vertical
//!   strips `λ∖κ` and cycle types `α ⊢ |κ|`, weighted by `Π C(x_i(σ), a_i)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::binom_poly::binomial;
use crate::partitions::{partitions_of, Partition, PartitionError};
use crate::tableaux::{dim_syt, factorial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("partition {partition} has size {size} but the cycle type has size {n}")]
    SizeMismatch {
        partition: Partition,
        size: usize,
        n: usize,
    },
    #[error("transposition formula needs n >= 2, got {0}")]
    TooSmall(usize),
    #[error("n = {n} is below the stable range n >= {min}")]
    OutOfStableRange { n: usize, min: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Cycle lengths of a permutation, fixed points included.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType {
    cycles: Partition,
}

impl CycleType {
    pub fn new(cycles: Partition) -> Self {
        CycleType { cycles }
    }

    /// The identity of `S_n`.
    pub fn identity(n: usize) -> Self {
        CycleType::new(Partition::column(n))
    }

    /// An `r`-cycle in `S_n`: `(r, 1^{n−r})`. `r = 1` gives the identity.
    pub fn cycle(r: usize, n: usize) -> Self {
        assert!(
            r >= 1 && r <= n.max(1),
            "cycle of length {r} does not fit in S_{n}"
        );
        if r == 1 {
            return CycleType::identity(n);
        }
        let mut parts = vec![r];
        parts.extend(std::iter::repeat_n(1, n - r));
        CycleType::new(Partition::new(parts).expect("descending"))
    }

    /// Extends the non-trivial cycles in `support` by fixed points up to `n`.
    pub fn with_fixed_points(support: &Partition, n: usize) -> Self {
        let mut parts: Vec<usize> = support.parts().iter().copied().filter(|&c| c > 1).collect();
        let moved: usize = parts.iter().sum();
        assert!(moved <= n, "support {support} does not fit in S_{n}");
        parts.extend(std::iter::repeat_n(1, n - moved));
        CycleType::new(Partition::new(parts).expect("descending"))
    }

    pub fn cycles(&self) -> &Partition {
        &self.cycles
    }

    pub fn n(&self) -> usize {
        self.cycles.size()
    }

    /// `x_i`: the number of cycles of length `i`, keyed by `i`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &c in self.cycles.parts() {
            *m.entry(c).or_insert(0) += 1;
        }
        m
    }

    /// `s = Σ_{i≥2} i·x_i`, the number of non-fixed points.
    pub fn moved_points(&self) -> usize {
        self.cycles.parts().iter().filter(|&&c| c > 1).sum()
    }

    /// `n! / Π_i i^{x_i} x_i!`.
    pub fn class_size(&self) -> BigUint {
        let denom = self
            .multiplicities()
            .iter()
            .fold(BigUint::one(), |acc, (&i, &x)| {
                acc * BigUint::from(i).pow(x as u32) * factorial(x)
            });
        factorial(self.n()) / denom
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycles)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{}", self.cycles)
    }
}

impl std::str::FromStr for CycleType {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(CycleType::new)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PeelOrder {
    /// Longest cycles first.
    #[default]
    Descending,
    Ascending,
}

/// Murnaghan–Nakayama evaluator with a memo table over
/// `(shape, remaining cycles)`.
///
/// Reusing one evaluator across many queries shares the table.
#[derive(Debug, Default)]
pub struct MnEvaluator {
    order: PeelOrder,
    memo: HashMap<(Partition, Vec<usize>), BigInt>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_order(order: PeelOrder) -> Self {
        MnEvaluator {
            order,
            memo: HashMap::new(),
        }
    }

    pub fn eval(&mut self, mu: &Partition, ct: &CycleType) -> Result<BigInt, CharacterError> {
        if mu.size() != ct.n() {
            return Err(CharacterError::SizeMismatch {
                partition: mu.clone(),
                size: mu.size(),
                n: ct.n(),
            });
        }
        let mut cycles = ct.cycles().parts().to_vec();
        if self.order == PeelOrder::Ascending {
            cycles.reverse();
        }
        Ok(self.peel(mu, &cycles))
    }

    fn peel(&mut self, mu: &Partition, cycles: &[usize]) -> BigInt {
        let Some((&r, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        if cycles.iter().all(|&c| c == 1) {
            return BigInt::from(dim_syt(mu));
        }
        let key = (mu.clone(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for hook in mu.skew_hooks(r) {
            let v = self.peel(hook.complement(), rest);
            if hook.sign() > 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ^μ` at a permutation of cycle type `ct`.
pub fn character_mn(mu: &Partition, ct: &CycleType) -> Result<BigInt, CharacterError> {
    MnEvaluator::new().eval(mu, ct)
}

/// `χ^μ(τ) = f^μ / C(n,2) · Σ_i [C(μ_i, 2) − C(μ^t_i, 2)]` for a transposition.
pub fn character_frobenius_transposition(mu: &Partition) -> Result<BigInt, CharacterError> {
    let n = mu.size();
    if n < 2 {
        return Err(CharacterError::TooSmall(n));
    }
    let choose2 = |m: usize| BigInt::from(m * m.saturating_sub(1) / 2);
    let rows: BigInt = mu.parts().iter().map(|&m| choose2(m)).sum();
    let cols: BigInt = mu.transpose().parts().iter().map(|&m| choose2(m)).sum();
    let value = BigRational::new(BigInt::from(dim_syt(mu)), choose2(n))
        * BigRational::from_integer(rows - cols);
    assert!(
        value.is_integer(),
        "Frobenius formula gave the non-integer {value} for {mu}"
    );
    Ok(value.to_integer())
}

/// `χ^κ` on a full `r`-cycle with `r = |κ|`: `(−1)^{r−i}` when `κ` is the hook
/// `(i, 1^{r−i})`, otherwise zero.
pub fn hook_cycle_value(kappa: &Partition) -> i32 {
    if kappa.is_empty() {
        return 1;
    }
    let i = kappa.first();
    let is_hook = kappa.parts()[1..].iter().all(|&p| p == 1);
    if !is_hook {
        return 0;
    }
    let leg = kappa.size() - i;
    if leg.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `χ^{(n−k,λ)}(σ)` through the vertical-strip expansion
///
/// ```text
/// Σ_{κ ⊆ λ, λ∖κ vertical strip} (−1)^{|λ∖κ|} Σ_{α ⊢ |κ|} χ^κ(π_α) · Π_i C(x_i(σ), a_i)
/// ```
///
/// valid for `n >= k + λ_1`, where `n` is the size of `ct`.
pub fn character_recpart(lambda: &Partition, ct: &CycleType) -> Result<BigInt, CharacterError> {
    let n = ct.n();
    let min = lambda.size() + lambda.first();
    if n < min {
        return Err(CharacterError::OutOfStableRange { n, min });
    }
    Ok(recpart_sum(lambda, ct))
}

/// The vertical-strip sum itself, evaluated at any `n` (no range check).
pub fn recpart_sum(lambda: &Partition, ct: &CycleType) -> BigInt {
    let mut x = ct.multiplicities();
    // x_1 = n − Σ_{i≥2} i·x_i
    x.insert(1, ct.n() - ct.moved_points());
    let mut mn = MnEvaluator::new();
    let k = lambda.size();
    let mut total = BigInt::zero();
    for kappa in lambda.vertical_strip_inners() {
        let mut inner = BigInt::zero();
        for alpha in partitions_of(kappa.size()) {
            let weight = CycleType::new(alpha.clone()).multiplicities().iter().fold(
                BigInt::one(),
                |acc, (&i, &a)| {
                    let xi = x.get(&i).copied().unwrap_or(0);
                    acc * binomial(&BigInt::from(xi), a)
                },
            );
            if weight.is_zero() {
                continue;
            }
            let chi = mn
                .eval(&kappa, &CycleType::new(alpha))
                .expect("sizes agree by construction");
            inner += chi * weight;
        }
        if (k - kappa.size()).is_multiple_of(2) {
            total += inner;
        } else {
            total -= inner;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_up_to;

    fn p(parts: &[usize]) -> Partition {
        Partition::try_from(parts).unwrap()
    }

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::new(p(parts))
    }

    #[test]
    fn mn_examples() {
        let v = character_mn(&p(&[3, 3, 3]), &CycleType::cycle(2, 9)).unwrap();
        assert_eq!(v, BigInt::from(0));
        for c in partitions_of(6) {
            assert_eq!(
                character_mn(&p(&[6]), &CycleType::new(c)).unwrap(),
                BigInt::from(1)
            );
        }
        for r in 1..=7 {
            for i in 1..=r {
                let mut parts = vec![i];
                parts.extend(std::iter::repeat_n(1, r - i));
                let hook = p(&parts);
                let expected = if (r - i) % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    character_mn(&hook, &CycleType::cycle(r, r)).unwrap(),
                    BigInt::from(expected)
                );
                assert_eq!(hook_cycle_value(&hook), expected);
            }
        }
        assert_eq!(
            character_mn(&Partition::empty(), &ct(&[])).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn mn_size_mismatch() {
        assert!(matches!(
            character_mn(&p(&[3]), &ct(&[2, 2])),
            Err(CharacterError::SizeMismatch { size: 3, n: 4, .. })
        ));
    }

    #[test]
    fn hook_cycle_value_matches_mn() {
        for r in 1..=8 {
            for kappa in partitions_of(r) {
                let mn = character_mn(&kappa, &CycleType::cycle(r, r)).unwrap();
                assert_eq!(mn, BigInt::from(hook_cycle_value(&kappa)), "{kappa}");
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(
            character_frobenius_transposition(&p(&[3, 3, 3])).unwrap(),
            BigInt::from(0)
        );
        assert_eq!(
            character_frobenius_transposition(&p(&[6])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            character_frobenius_transposition(&Partition::column(6)).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            character_frobenius_transposition(&p(&[1])),
            Err(CharacterError::TooSmall(1))
        );
    }

    #[test]
    fn recpart_examples() {
        for c in [ct(&[1, 1, 1]), ct(&[3]), ct(&[2, 2, 1])] {
            assert_eq!(
                character_recpart(&Partition::empty(), &c).unwrap(),
                BigInt::from(1)
            );
        }
        let v = character_recpart(&p(&[3, 3]), &CycleType::cycle(3, 12)).unwrap();
        assert_eq!(v, BigInt::from(-15));
        assert_eq!(
            character_mn(&p(&[6, 3, 3]), &CycleType::cycle(3, 12)).unwrap(),
            BigInt::from(-15)
        );

        // χ^{(n−1,1)} = #fixed points − 1
        for support in [p(&[]), p(&[2]), p(&[3, 2]), p(&[4])] {
            for n in 3..=9 {
                if support.size() > n {
                    continue;
                }
                let c = CycleType::with_fixed_points(&support, n);
                let fixed = (n - c.moved_points()) as i64;
                assert_eq!(
                    character_recpart(&p(&[1]), &c).unwrap(),
                    BigInt::from(fixed - 1)
                );
            }
        }
        assert_eq!(
            character_recpart(&p(&[3, 3]), &CycleType::cycle(3, 8)),
            Err(CharacterError::OutOfStableRange { n: 8, min: 9 })
        );
    }

    #[test]
    fn identity_gives_dimension() {
        for mu in partitions_up_to(9) {
            let v = character_mn(&mu, &CycleType::identity(mu.size())).unwrap();
            assert_eq!(v, BigInt::from(dim_syt(&mu)));
        }
    }

    #[test]
    fn peel_order_does_not_matter() {
        let mut desc = MnEvaluator::with_order(PeelOrder::Descending);
        let mut asc = MnEvaluator::with_order(PeelOrder::Ascending);
        for n in 0..=8 {
            for mu in partitions_of(n) {
                for c in partitions_of(n) {
                    let c = CycleType::new(c);
                    assert_eq!(desc.eval(&mu, &c).unwrap(), asc.eval(&mu, &c).unwrap());
                }
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let mut classes = vec![CycleType::identity(n)];
            if n >= 2 {
                classes.push(CycleType::cycle(2, n));
            }
            for c in classes {
                let sum: BigInt = partitions_of(n)
                    .iter()
                    .map(|mu| {
                        let v = character_mn(mu, &c).unwrap();
                        &v * &v
                    })
                    .sum();
                assert_eq!(
                    sum * BigInt::from(c.class_size()),
                    BigInt::from(factorial(n))
                );
            }
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(CycleType::cycle(2, 4).class_size(), BigUint::from(6u32));
        assert_eq!(ct(&[2, 2]).class_size(), BigUint::from(3u32));
        assert_eq!(CycleType::identity(5).class_size(), BigUint::from(1u32));
    }

    #[test]
    fn cycle_type_json() {
        assert_eq!(
            serde_json::to_string(&CycleType::cycle(3, 5)).unwrap(),
            "[3,1,1]"
        );
        let back: CycleType = serde_json::from_str("[2,2,1]").unwrap();
        assert_eq!(back.multiplicities(), BTreeMap::from([(1, 1), (2, 2)]));
    }
}
