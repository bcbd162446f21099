//! Counts of standard Young tableaux of straight and skew shapes.
//!
//! `f^λ` comes from the hook length formula. `f^{λ∖ν}` is the number of
//! saturated chains from `ν` up to `λ` in Young's lattice, computed by peeling
//! internal corners off the outer shape:
//!
//! ```text
//! f^{λ∖ν} = Σ_{v ∈ IC(λ)} f^{(λ−v)∖ν}     (ν ≠ λ)
//! ```
//!
//! Results are memoized per thread, keyed by `(outer, inner)`.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::partitions::Partition;

/// The shape `outer ∖ inner`. Construction does not require containment;
/// a non-contained pair simply counts zero tableaux.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Self {
        SkewShape { outer, inner }
    }

    pub fn is_valid(&self) -> bool {
        self.outer.contains(&self.inner)
    }

    /// Number of cells, `None` when `inner ⊄ outer`.
    pub fn size(&self) -> Option<usize> {
        self.is_valid()
            .then(|| self.outer.size() - self.inner.size())
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// `f^μ = n! / Π h_v`.
pub fn dim_syt(mu: &Partition) -> BigUint {
    let hooks = mu
        .hook_lengths()
        .values()
        .fold(BigUint::one(), |acc, &h| acc * h as u64);
    let (q, rem) = factorial(mu.size()).div_rem(&hooks);
    assert!(rem.is_zero(), "hook product does not divide n! for {mu}");
    q
}

thread_local! {
    static SKEW_CACHE: RefCell<HashMap<(Partition, Partition), BigUint>> =
        RefCell::new(HashMap::new());
}

/// `f^{λ∖ν}`: 0 when `ν ⊄ λ`, 1 when `ν = λ`.
pub fn skew_syt_count(shape: &SkewShape) -> BigUint {
    count_chains(&shape.outer, &shape.inner)
}

/// `f^{outer∖inner}` without building a [`SkewShape`].
pub fn skew_count(outer: &Partition, inner: &Partition) -> BigUint {
    count_chains(outer, inner)
}

fn count_chains(outer: &Partition, inner: &Partition) -> BigUint {
    if !outer.contains(inner) {
        return BigUint::zero();
    }
    if outer == inner {
        return BigUint::one();
    }
    let key = (outer.clone(), inner.clone());
    if let Some(hit) = SKEW_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let total = outer
        .predecessors()
        .iter()
        .map(|smaller| count_chains(smaller, inner))
        .fold(BigUint::zero(), |acc, x| acc + x);
    SKEW_CACHE.with(|c| c.borrow_mut().insert(key, total.clone()));
    total
}

/// Drops the calling thread's skew-count memo table.
pub fn clear_cache() {
    SKEW_CACHE.with(|c| c.borrow_mut().clear());
}

/// `a_{λ,h} = f^{λ∖(1^h)}`: tableaux of shape `λ` with `1..h` down the first
/// column.
pub fn a_coeff(lambda: &Partition, h: usize) -> BigUint {
    count_chains(lambda, &Partition::column(h))
}

/// Fills `outer ∖ inner` with `1..m` cell by cell. Exponential; only meant as
/// an independent check on [`skew_syt_count`].
pub fn brute_force_skew_count(outer: &Partition, inner: &Partition) -> u64 {
    if !outer.contains(inner) {
        return 0;
    }
    fn go(current: &mut Vec<usize>, outer: &Partition) -> u64 {
        let mut total = 0;
        let mut placed = false;
        for row in 0..outer.len() {
            let width = current[row];
            if width == outer.parts()[row] {
                continue;
            }
            // next cell (row, width+1) must have its upper neighbour filled
            let above = if row == 0 {
                usize::MAX
            } else {
                current[row - 1]
            };
            if above > width {
                placed = true;
                current[row] += 1;
                total += go(current, outer);
                current[row] -= 1;
            }
        }
        if placed {
            total
        } else {
            u64::from(current.as_slice() == outer.parts())
        }
    }
    let mut current: Vec<usize> = (1..=outer.len()).map(|i| inner.part(i)).collect();
    go(&mut current, outer)
}
