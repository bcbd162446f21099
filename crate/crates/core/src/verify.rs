//! Property sweeps that pit every evaluator against the others.
//!
//! Each check is a public function taking explicit bounds and returning a
//! [`PropertyReport`]. [`run`] drives all of them from one [`VerifyConfig`];
//! the acceptance suite calls them individually with its own bounds.
//!
//! Work is split per partition and fanned out over a rayon pool of
//! `jobs` threads. Results are collected in input order, so the report is
//! identical for any thread count.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::binom_poly::{interpolate, BinomPoly};
use crate::characters::{
    character_frobenius_transposition, character_mn, character_recpart, recpart_sum, CycleType,
    MnEvaluator, PeelOrder,
};
use crate::partitions::{partitions_of, partitions_up_to, Cell, Partition};
use crate::stability::{
    basis2_closed_form, char_poly_with, coeff_b_over, coeff_b_transposition_split, constant_coeff,
    constant_coeff_vertical_strips, dim_poly, dim_poly_alt, primary_count, r_primary, Basis2Case,
    Family, SignedPartition,
};
use crate::tableaux::{a_coeff, brute_force_skew_count, dim_syt, factorial, skew_count};

/// A deliberate defect for mutation-testing the sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Flip `ε^r_ν` of the first third-family partition in every `Γ^r_h`.
    FlipSign,
}

/// The family `Γ^r_h`, possibly corrupted by `fault`.
pub fn primaries(r: usize, h: usize, fault: Option<Fault>) -> Vec<SignedPartition> {
    let mut g = r_primary(r, h);
    if fault == Some(Fault::FlipSign) {
        if let Some(sp) = g.iter_mut().find(|s| s.family == Family::TypeThree) {
            sp.sign = -sp.sign;
        }
    }
    g
}

fn coeff(lambda: &Partition, h: usize, r: usize, fault: Option<Fault>) -> BigInt {
    if h > lambda.size() {
        return BigInt::from(0);
    }
    coeff_b_over(lambda, &primaries(r, h, fault))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_k: usize,
    pub max_r: usize,
    pub n_window: usize,
    pub jobs: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_k: 8,
            max_r: 6,
            n_window: 6,
            jobs: 1,
            fault: None,
        }
    }
}

/// Outcome of one property over its whole sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
    /// Disagreements are listed but do not fail the run.
    pub report_only: bool,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.report_only || self.failures == 0
    }
}

/// Per-item tally, merged in item order.
#[derive(Debug, Default)]
struct Tally {
    checks: u64,
    failures: u64,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    fn eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        got: T,
        want: T,
        ctx: impl FnOnce() -> String,
    ) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got}, expected {want}", ctx()));
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures += other.failures;
        if self.first.is_none() {
            self.first = other.first;
        }
        self
    }

    fn into_report(self, name: &'static str) -> PropertyReport {
        PropertyReport {
            name,
            checks: self.checks,
            failures: self.failures,
            first_failure: self.first,
            report_only: false,
        }
    }
}

fn sweep<T, F>(items: Vec<T>, f: F) -> Tally
where
    T: Send + Sync,
    F: Fn(&T, &mut Tally) + Send + Sync,
{
    items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            f(item, &mut t);
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

fn nonempty_up_to(max: usize) -> Vec<Partition> {
    partitions_up_to(max)
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect()
}

// ---- partitions ----

pub fn corners_count_distinct_parts(max_size: usize) -> PropertyReport {
    sweep(partitions_up_to(max_size), |l, t| {
        t.eq(l.corners().count(), l.distinct_parts(), || format!("λ={l}"));
    })
    .into_report("partitions/corners-are-distinct-parts")
}

pub fn transpose_containment(max_size: usize) -> PropertyReport {
    let shapes = partitions_up_to(max_size);
    sweep(shapes.clone(), |l, t| {
        t.eq(l.transpose().transpose(), l.clone(), || format!("λ={l}"));
        for nu in &shapes {
            let a = l.contains(nu);
            let b = l.transpose().contains(&nu.transpose());
            t.eq(a, b, || format!("λ={l}, ν={nu}"));
        }
    })
    .into_report("partitions/transpose-preserves-containment")
}

/// All `r`-subsets of cells that are connected, lie on the boundary, and
/// leave a partition.
fn brute_force_strips(l: &Partition, r: usize) -> Vec<Vec<Cell>> {
    let cells: Vec<Cell> = l.cells().collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        cells: &[Cell],
        start: usize,
        r: usize,
        chosen: &mut Vec<Cell>,
        l: &Partition,
        out: &mut Vec<Vec<Cell>>,
    ) {
        if chosen.len() == r {
            if chosen.iter().all(|&c| l.is_boundary(c))
                && connected(chosen)
                && l.remove_cells(chosen).is_some()
            {
                out.push(chosen.clone());
            }
            return;
        }
        for i in start..cells.len() {
            chosen.push(cells[i]);
            rec(cells, i + 1, r, chosen, l, out);
            chosen.pop();
        }
    }
    fn connected(cells: &[Cell]) -> bool {
        let mut seen = vec![false; cells.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..cells.len() {
                let (a, b) = (cells[i], cells[j]);
                let adjacent = a.row.abs_diff(b.row) + a.col.abs_diff(b.col) == 1;
                if adjacent && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
    rec(&cells, 0, r, &mut chosen, l, &mut out);
    out
}

pub fn skew_hooks_match_brute_force(max_size: usize) -> PropertyReport {
    sweep(nonempty_up_to(max_size), |l, t| {
        for r in 1..=l.size() {
            let hooks = l.skew_hooks(r);
            let mut fast: Vec<Vec<Cell>> = hooks.iter().map(|h| h.cells().to_vec()).collect();
            for h in &hooks {
                t.eq(h.len(), r, || format!("λ={l}, r={r}, hook size"));
                t.eq(h.complement().size(), l.size() - r, || {
                    format!("λ={l}, r={r}, complement")
                });
                let rows = h.cells().last().unwrap().row - h.cells()[0].row;
                t.eq(h.leg_length(), rows, || format!("λ={l}, r={r}, leg length"));
            }
            let mut slow = brute_force_strips(l, r);
            fast.sort();
            slow.sort();
            t.check(fast == slow, || {
                format!("λ={l}, r={r}: strips {fast:?} vs {slow:?}")
            });
            // border strips of size r correspond to cells of hook length r
            let by_hook = l.cells().filter(|&c| l.hook_length(c) == r).count();
            t.eq(hooks.len(), by_hook, || {
                format!("λ={l}, r={r}, hook-length count")
            });
        }
    })
    .into_report("partitions/skew-hooks-match-brute-force")
}

pub fn hook_product_divides_factorial(max_size: usize) -> PropertyReport {
    sweep(partitions_up_to(max_size), |l, t| {
        let prod = l
            .hook_lengths()
            .values()
            .fold(num_bigint::BigUint::from(1u32), |a, &h| a * h as u64);
        let rem = factorial(l.size()) % prod;
        t.check(rem == num_bigint::BigUint::from(0u32), || format!("λ={l}"));
    })
    .into_report("partitions/hook-product-divides-factorial")
}

// ---- tableaux ----

pub fn branching_rule(max_size: usize) -> PropertyReport {
    sweep(nonempty_up_to(max_size), |l, t| {
        let sum: num_bigint::BigUint = l.predecessors().iter().map(dim_syt).sum();
        t.eq(dim_syt(l), sum, || format!("λ={l}"));
        t.eq(dim_syt(l), skew_count(l, &Partition::empty()), || {
            format!("λ={l}, f^λ vs f^(λ∖∅)")
        });
    })
    .into_report("tableaux/branching-rule")
}

pub fn skew_recurrence(max_size: usize) -> PropertyReport {
    let shapes = partitions_up_to(max_size);
    sweep(shapes.clone(), |l, t| {
        for nu in &shapes {
            if nu == l {
                continue;
            }
            let sum: num_bigint::BigUint = l.predecessors().iter().map(|m| skew_count(m, nu)).sum();
            t.eq(skew_count(l, nu), sum, || format!("λ={l}, ν={nu}"));
        }
    })
    .into_report("tableaux/skew-recurrence")
}

pub fn column_vs_hook_difference(max_size: usize) -> PropertyReport {
    sweep(partitions_up_to(max_size), |l, t| {
        for h in 2..=l.len() {
            let lhs = BigInt::from(a_coeff(l, h - 1)) - BigInt::from(a_coeff(l, h));
            let mut hook = vec![2];
            hook.extend(std::iter::repeat_n(1, h - 2));
            let rhs = BigInt::from(skew_count(l, &Partition::new(hook).unwrap()));
            t.eq(lhs, rhs, || format!("λ={l}, h={h}"));
        }
    })
    .into_report("tableaux/column-minus-column-is-hook")
}

pub fn skew_count_oracle(max_size: usize) -> PropertyReport {
    let shapes = partitions_up_to(max_size);
    sweep(shapes.clone(), |l, t| {
        for nu in &shapes {
            let fast = skew_count(l, nu);
            let slow = num_bigint::BigUint::from(brute_force_skew_count(l, nu));
            t.eq(fast, slow, || format!("λ={l}, ν={nu}"));
        }
    })
    .into_report("tableaux/skew-count-vs-backtracking")
}

// ---- characters ----

pub fn mn_identity_is_dimension(max_n: usize) -> PropertyReport {
    sweep(partitions_up_to(max_n), |mu, t| {
        let v = character_mn(mu, &CycleType::identity(mu.size())).unwrap();
        t.eq(v, BigInt::from(dim_syt(mu)), || format!("μ={mu}"));
    })
    .into_report("characters/mn-identity-is-dimension")
}

pub fn frobenius_vs_mn(min_n: usize, max_n: usize) -> PropertyReport {
    let shapes: Vec<Partition> = (min_n.max(2)..=max_n).flat_map(partitions_of).collect();
    sweep(shapes, |mu, t| {
        let n = mu.size();
        let a = character_frobenius_transposition(mu).unwrap();
        let b = character_mn(mu, &CycleType::cycle(2, n)).unwrap();
        t.eq(a, b, || format!("μ={mu}, n={n}"));
    })
    .into_report("characters/frobenius-vs-mn")
}

/// Non-trivial cycle supports: partitions of `0..=max` with all parts `>= 2`.
fn supports(max: usize) -> Vec<Partition> {
    partitions_up_to(max)
        .into_iter()
        .filter(|p| p.parts().iter().all(|&c| c >= 2))
        .collect()
}

/// `character_recpart` against MN for `n ∈ [k+λ_1+lo, k+λ_1+hi]`. With
/// `report_only` the window is treated as a band to observe.
pub fn recpart_vs_mn(
    max_k: usize,
    max_support: usize,
    lo: usize,
    hi: usize,
    report_only: bool,
) -> PropertyReport {
    let sup = supports(max_support);
    let name = if report_only {
        "characters/recpart-band"
    } else {
        "characters/recpart-vs-mn"
    };
    let mut rep = sweep(partitions_up_to(max_k), |l, t| {
        let mut mn = MnEvaluator::new();
        let base = l.size() + l.first();
        for s in &sup {
            for n in base + lo..=base + hi {
                if s.size() > n {
                    continue;
                }
                let ct = CycleType::with_fixed_points(s, n);
                let first_row = n - l.size();
                let mu = Partition::prepend_row(first_row, l).expect("n >= k + λ_1");
                let want = mn.eval(&mu, &ct).unwrap();
                let got = character_recpart(l, &ct).unwrap();
                t.eq(got, want, || format!("λ={l}, ct={ct}, n={n}"));
            }
        }
    })
    .into_report(name);
    rep.report_only = report_only;
    rep
}

pub fn mn_peel_order(max_n: usize) -> PropertyReport {
    sweep((0..=max_n).collect(), |&n, t| {
        let mut desc = MnEvaluator::with_order(PeelOrder::Descending);
        let mut asc = MnEvaluator::with_order(PeelOrder::Ascending);
        for mu in partitions_of(n) {
            for c in partitions_of(n) {
                let ct = CycleType::new(c);
                let a = desc.eval(&mu, &ct).unwrap();
                let b = asc.eval(&mu, &ct).unwrap();
                t.eq(a, b, || format!("μ={mu}, ct={ct}"));
            }
        }
    })
    .into_report("characters/mn-peel-order-independent")
}

pub fn column_orthogonality(max_n: usize) -> PropertyReport {
    sweep((1..=max_n).collect(), |&n, t| {
        let mut classes = vec![CycleType::identity(n)];
        if n >= 2 {
            classes.push(CycleType::cycle(2, n));
        }
        let mut mn = MnEvaluator::new();
        for ct in classes {
            let sum: BigInt = partitions_of(n)
                .iter()
                .map(|mu| {
                    let v = mn.eval(mu, &ct).unwrap();
                    &v * &v
                })
                .sum();
            let total = sum * BigInt::from(ct.class_size());
            t.eq(total, BigInt::from(factorial(n)), || {
                format!("n={n}, ct={ct}")
            });
        }
    })
    .into_report("characters/column-orthogonality")
}

// ---- binom_poly ----

fn sample_polys(max_k: usize, max_r: usize) -> Vec<BinomPoly> {
    let mut out = Vec::new();
    for l in partitions_up_to(max_k) {
        out.push(dim_poly(&l));
        for r in 1..=max_r {
            out.push(char_poly_with(&l, r, r_primary).poly());
        }
    }
    out
}

pub fn interpolation_roundtrip(max_k: usize, max_r: usize) -> PropertyReport {
    sweep(sample_polys(max_k, max_r), |p, t| {
        for s in -3..=8 {
            let q = p.reshift(s);
            let d = q.coeffs().len() as i64;
            let values: Vec<BigInt> = (0..d).map(|i| q.eval(s + i)).collect();
            t.check(interpolate(&values, s) == q, || format!("{q:?}"));
        }
    })
    .into_report("binom_poly/interpolate-roundtrip")
}

pub fn reshift_preserves_values(max_k: usize, max_r: usize) -> PropertyReport {
    sweep(sample_polys(max_k, max_r), |p, t| {
        for s in [-2, 0, 1, 5] {
            let q = p.reshift(s);
            for x in -5..15 {
                t.eq(q.eval(x), p.eval(x), || format!("{p:?} → shift {s}, x={x}"));
            }
            t.check(q.reshift(p.shift()) == *p, || {
                format!("{p:?} round trip via {s}")
            });
        }
    })
    .into_report("binom_poly/reshift-preserves-values")
}

// ---- stability ----

/// `eval(char_poly(λ, r))` against MN on `(r, 1^{n−r})` for
/// `n ∈ [k+λ_1+r, k+λ_1+r+n_window]`.
pub fn main_oracle(
    max_k: usize,
    max_r: usize,
    n_window: usize,
    fault: Option<Fault>,
) -> PropertyReport {
    sweep(partitions_up_to(max_k), |l, t| {
        let mut mn = MnEvaluator::new();
        for r in 1..=max_r {
            let e = char_poly_with(l, r, |r, h| primaries(r, h, fault));
            let start = e.strict_start();
            for n in start..=start + n_window {
                let mu = Partition::prepend_row(n - l.size(), l).unwrap();
                let want = mn.eval(&mu, &CycleType::cycle(r, n)).unwrap();
                t.eq(e.eval(n as i64), want, || format!("λ={l}, r={r}, n={n}"));
            }
        }
    })
    .into_report("stability/main-oracle")
}

/// The same comparison on `max(k+λ_1, r) <= n < k+λ_1+r`.
pub fn main_band(max_k: usize, max_r: usize) -> PropertyReport {
    let mut rep = sweep(partitions_up_to(max_k), |l, t| {
        let mut mn = MnEvaluator::new();
        for r in 1..=max_r {
            let e = char_poly_with(l, r, r_primary);
            let lo = (l.size() + l.first()).max(r);
            for n in lo..e.strict_start() {
                let mu = Partition::prepend_row(n - l.size(), l).unwrap();
                let want = mn.eval(&mu, &CycleType::cycle(r, n)).unwrap();
                t.eq(e.eval(n as i64), want, || format!("λ={l}, r={r}, n={n}"));
            }
        }
    })
    .into_report("stability/main-band");
    rep.report_only = true;
    rep
}

pub fn coefficient_recurrence(max_k: usize, max_r: usize, fault: Option<Fault>) -> PropertyReport {
    sweep(nonempty_up_to(max_k), |l, t| {
        let preds = l.predecessors();
        for r in 1..=max_r {
            for h in 0..l.size() {
                let sum: BigInt = preds.iter().map(|m| coeff(m, h, r, fault)).sum();
                t.eq(coeff(l, h, r, fault), sum, || {
                    format!("λ={l}, h={h}, r={r}")
                });
            }
        }
    })
    .into_report("stability/coefficient-recurrence")
}

pub fn vanishing_bound(max_k: usize, max_r: usize, fault: Option<Fault>) -> PropertyReport {
    sweep(partitions_up_to(max_k), |l, t| {
        for r in 1..=max_r {
            for h in (l.len() + r + 1)..=l.size() {
                t.eq(coeff(l, h, r, fault), BigInt::from(0), || {
                    format!("λ={l}, h={h}, r={r}")
                });
            }
        }
    })
    .into_report("stability/vanishing-beyond-length-plus-r")
}

pub fn stabilization(max_k: usize, max_r: usize, fault: Option<Fault>) -> PropertyReport {
    sweep(partitions_up_to(max_k), |l, t| {
        for h in 0..=l.size() {
            let a = BigInt::from(a_coeff(l, h));
            for r in (h + 1)..=max_r {
                t.eq(coeff(l, h, r, fault), a.clone(), || {
                    format!("λ={l}, h={h}, r={r}")
                });
            }
        }
    })
    .into_report("stability/stabilizes-for-r-above-h")
}

pub fn leading_coefficient(max_k: usize, max_r: usize, fault: Option<Fault>) -> PropertyReport {
    sweep(partitions_up_to(max_k), |l, t| {
        for r in 1..=max_r {
            t.eq(coeff(l, 0, r, fault), BigInt::from(dim_syt(l)), || {
                format!("λ={l}, r={r}")
            });
        }
    })
    .into_report("stability/leading-coefficient")
}

pub fn small_h_transpose(max_k: usize, fault: Option<Fault>) -> PropertyReport {
    sweep(partitions_up_to(max_k), |l, t| {
        let lt = l.transpose();
        for h in 0..=3.min(l.size()) {
            t.eq(coeff(l, h, 2, fault), BigInt::from(a_coeff(&lt, h)), || {
                format!("λ={l}, h={h}")
            });
        }
    })
    .into_report("stability/transposition-small-h")
}

pub fn transposition_split(max_k: usize, fault: Option<Fault>) -> PropertyReport {
    sweep(partitions_up_to(max_k), |l, t| {
        for h in 0..=l.size() + 1 {
            let (plus, minus) = coeff_b_transposition_split(l, h);
            let diff = BigInt::from(plus) - BigInt::from(minus);
            t.eq(coeff(l, h, 2, fault), diff, || format!("λ={l}, h={h}"));
        }
    })
    .into_report("stability/transposition-split")
}

pub fn gamma_size_law(max_r: usize) -> PropertyReport {
    sweep((1..=max_r).collect(), |&r, t| {
        for h in 0..=3 * r {
            t.eq(r_primary(r, h).len(), primary_count(r, h), || {
                format!("r={r}, h={h}")
            });
        }
    })
    .into_report("stability/primary-count-law")
}

/// Interpolates MN values on `k+1` points of the strict window and compares
/// with the formula, after moving the basis to shift `r`.
pub fn interpolation_dual_path(max_k: usize, max_r: usize, fault: Option<Fault>) -> PropertyReport {
    sweep(partitions_up_to(max_k), |l, t| {
        let mut mn = MnEvaluator::new();
        for r in 1..=max_r {
            let e = char_poly_with(l, r, |r, h| primaries(r, h, fault));
            let start = e.strict_start();
            let values: Vec<BigInt> = (start..=start + l.size())
                .map(|n| {
                    let mu = Partition::prepend_row(n - l.size(), l).unwrap();
                    mn.eval(&mu, &CycleType::cycle(r, n)).unwrap()
                })
                .collect();
            let fitted = interpolate(&values, start as i64).reshift(r as i64);
            t.check(fitted == e.poly(), || {
                format!(
                    "λ={l}, r={r}: interpolated {fitted} vs formula {}",
                    e.poly()
                )
            });
        }
    })
    .into_report("stability/interpolation-dual-path")
}

pub fn frobenius_route(max_k: usize, n_window: usize, fault: Option<Fault>) -> PropertyReport {
    sweep(partitions_up_to(max_k), |l, t| {
        let e = char_poly_with(l, 2, |r, h| primaries(r, h, fault));
        let start = e.strict_start();
        for n in start..=start + n_window {
            let mu = Partition::prepend_row(n - l.size(), l).unwrap();
            let want = character_frobenius_transposition(&mu).unwrap();
            t.eq(e.eval(n as i64), want, || format!("λ={l}, r=2, n={n}"));
        }
    })
    .into_report("stability/frobenius-route")
}

/// Closed forms for `(1^k)`, `(2,1^{k−2})`, `(3,1^{k−3})`, `(2,2,1^{k−4})` on
/// a transposition.
pub fn basis2_closed_forms_match(
    min_k: usize,
    max_k: usize,
    fault: Option<Fault>,
) -> PropertyReport {
    let items: Vec<(Basis2Case, usize)> = Basis2Case::ALL
        .iter()
        .flat_map(|&c| (c.min_k().max(min_k)..=max_k).map(move |k| (c, k)))
        .collect();
    sweep(items, |&(case, k), t| {
        let l = case.partition(k).unwrap();
        let closed = basis2_closed_form(case, k).unwrap();
        let e = char_poly_with(&l, 2, |r, h| primaries(r, h, fault));
        t.check(e.b() == closed.as_slice(), || {
            format!(
                "{case:?} k={k} (λ={l}): closed form {closed:?} vs formula {:?}",
                e.b()
            )
        });
        // the closed form should also evaluate to the character directly
        let poly = crate::stability::CharPolyExpansion::new(l.clone(), 2, closed).poly();
        let mut mn = MnEvaluator::new();
        for n in (k + 2).max(k + l.first())..=k + l.first() + 4 {
            let mu = Partition::prepend_row(n - k, &l).unwrap();
            let want = mn.eval(&mu, &CycleType::cycle(2, n)).unwrap();
            t.eq(poly.eval(n as i64), want, || {
                format!("{case:?} k={k}, n={n}")
            });
        }
    })
    .into_report("stability/transposition-closed-forms")
}

/// The constant term three ways: shape classification, the tableau formula
/// at `h = k`, and the vertical-strip expansion.
pub fn constant_coeff_routes(max_k: usize, max_r: usize, fault: Option<Fault>) -> PropertyReport {
    sweep(partitions_up_to(max_k), |l, t| {
        for r in 1..=max_r {
            let by_shape = constant_coeff(l, r);
            let by_strips = constant_coeff_vertical_strips(l, r);
            t.eq(by_shape, by_strips, || {
                format!("λ={l}, r={r}, shape vs strips")
            });
            let by_formula = coeff(l, l.size(), r, fault);
            t.eq(by_formula, BigInt::from(by_shape), || {
                format!("λ={l}, h=k, r={r}")
            });
            // and straight from the recpart sum: the constant term of the
            // polynomial in C(n−r, ·) is its value at n = r
            if r >= 2 {
                let ct = CycleType::cycle(r, r);
                let at_r = recpart_sum(l, &ct);
                let sign = if l.size() % 2 == 0 { 1 } else { -1 };
                t.eq(at_r * sign, BigInt::from(by_shape), || {
                    format!("λ={l}, r={r}, recpart at n=r")
                });
            }
        }
    })
    .into_report("stability/constant-term-routes")
}

pub fn dim_poly_routes(max_k: usize) -> PropertyReport {
    sweep(partitions_up_to(max_k), |l, t| {
        let p0 = dim_poly(l);
        let p1 = dim_poly_alt(l);
        t.check(p0.same_function(&p1), || format!("λ={l}: {p0} vs {p1}"));
        for n in (l.size() + l.first())..=(l.size() + l.first() + 4) {
            let mu = Partition::prepend_row(n - l.size(), l).unwrap();
            t.eq(p0.eval(n as i64), BigInt::from(dim_syt(&mu)), || {
                format!("λ={l}, n={n}")
            });
        }
    })
    .into_report("stability/dimension-expansions")
}

/// Full report from one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub config: VerifyConfig,
    pub properties: Vec<PropertyReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyReport::passed)
    }

    pub fn first_failure(&self) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| !p.passed())
    }

    /// Deterministic text report, no timings.
    pub fn render(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "verify max_k={} max_r={} n_window={}\n",
            c.max_k, c.max_r, c.n_window
        );
        for p in &self.properties {
            let tag = if p.report_only {
                "INFO"
            } else if p.failures == 0 {
                "PASS"
            } else {
                "FAIL"
            };
            let what = if p.report_only {
                "disagreements"
            } else {
                "failures"
            };
            writeln!(
                out,
                "[{tag}] {:<46} checks={:<7} {what}={}",
                p.name, p.checks, p.failures
            )
            .unwrap();
            if let Some(f) = &p.first_failure {
                writeln!(out, "       first counterexample: {f}").unwrap();
            }
        }
        let failed = self.properties.iter().filter(|p| !p.passed()).count();
        writeln!(
            out,
            "summary: {} properties, {} failed",
            self.properties.len(),
            failed
        )
        .unwrap();
        out
    }
}

/// Runs every property within `config`'s bounds.
///
/// Shape-level checks use sizes up to `max_k`; cycle lengths and non-trivial
/// supports go up to `max_r`; `n_window` is the number of extra `n` values
/// above each validity threshold.
pub fn run(config: VerifyConfig) -> Report {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| run_in_pool(config))
}

fn run_in_pool(c: VerifyConfig) -> Report {
    let VerifyConfig {
        max_k,
        max_r,
        n_window,
        fault,
        ..
    } = c;
    let brute = max_k.min(9);
    let properties = vec![
        corners_count_distinct_parts(max_k),
        transpose_containment(max_k),
        skew_hooks_match_brute_force(brute),
        hook_product_divides_factorial(max_k),
        branching_rule(max_k),
        skew_recurrence(max_k),
        column_vs_hook_difference(max_k),
        skew_count_oracle(brute),
        mn_identity_is_dimension(max_k),
        frobenius_vs_mn(2, max_k + 2),
        mn_peel_order(max_k.min(8)),
        column_orthogonality(max_k.min(7)),
        recpart_vs_mn(
            max_k.min(5),
            max_r,
            max_r,
            max_r + n_window.saturating_sub(1),
            false,
        ),
        recpart_vs_mn(max_k.min(5), max_r, 0, max_r.saturating_sub(1), true),
        interpolation_roundtrip(max_k.min(6), max_r),
        reshift_preserves_values(max_k.min(6), max_r),
        main_oracle(max_k, max_r, n_window, fault),
        main_band(max_k, max_r),
        coefficient_recurrence(max_k, max_r, fault),
        vanishing_bound(max_k, max_r, fault),
        stabilization(max_k, max_k + 2, fault),
        leading_coefficient(max_k, max_r, fault),
        small_h_transpose(max_k, fault),
        transposition_split(max_k, fault),
        gamma_size_law(max_r + 2),
        interpolation_dual_path(max_k, max_r, fault),
        frobenius_route(max_k, n_window, fault),
        basis2_closed_forms_match(0, max_k + 4, fault),
        constant_coeff_routes(max_k + 1, max_r, fault),
        dim_poly_routes(max_k),
    ];
    Report {
        config: c,
        properties,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let rep = run(VerifyConfig {
            max_k: 4,
            max_r: 3,
            n_window: 2,
            jobs: 1,
            fault: None,
        });
        assert!(rep.passed(), "{}", rep.render());
    }

    #[test]
    fn injected_sign_flip_is_caught() {
        let rep = main_oracle(5, 3, 2, Some(Fault::FlipSign));
        assert!(rep.failures > 0);
        assert!(rep.first_failure.unwrap().contains("λ="));
    }

    #[test]
    fn report_is_independent_of_jobs() {
        let cfg = VerifyConfig {
            max_k: 4,
            max_r: 3,
            n_window: 2,
            jobs: 1,
            fault: None,
        };
        let one = run(cfg).render();
        let four = run(VerifyConfig { jobs: 4, ..cfg }).render();
        assert_eq!(one, four);
    }
}
