//! Closed-form bounds on Γ relative to α, τ and the degree range.
//!
//! Arithmetic is exact; floors are taken only when an integer certificate
//! is returned.

use crate::domination::FipoPartition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use num_rational::Ratio;

pub type Rational = Ratio<i64>;

fn r(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

/// For an upper dominating set with partition `fipo`: if `|D| > α` then
/// `|I| ≤ α − 2`.
pub fn independent_part_bound(g: &Graph, fipo: &FipoPartition, alpha: usize) -> Result<bool> {
    fipo.validate(g).map_err(Error::InvalidInput)?;
    let d = fipo.f.len() + fipo.i.len();
    Ok(d <= alpha || fipo.i.len() + 2 <= alpha)
}

/// `max{α, n/2 + α/2 − 1}` as a rational.
pub fn gamma_upper_bound_exact(n: usize, alpha: usize) -> Result<Rational> {
    if alpha < 1 || alpha > n {
        return Err(Error::invalid(format!("need 1 <= alpha <= n, got alpha={alpha}, n={n}")));
    }
    let second = r(n) / 2 + r(alpha) / 2 - 1;
    Ok(second.max(r(alpha)))
}

/// Integer certificate `⌊max{α, n/2 + α/2 − 1}⌋`.
pub fn gamma_upper_bound(n: usize, alpha: usize) -> Result<usize> {
    Ok(gamma_upper_bound_exact(n, alpha)?.floor().to_integer() as usize)
}

/// `max{α, n/2 + α(Δ−δ)/(2Δ) − (Δ−δ)/Δ}`.
pub fn gamma_upper_bound_degree(
    n: usize,
    alpha: usize,
    delta_min: usize,
    delta_max: usize,
) -> Result<Rational> {
    if delta_max < 1 || delta_min > delta_max {
        return Err(Error::invalid(format!(
            "need 0 <= delta <= Delta and Delta >= 1, got delta={delta_min}, Delta={delta_max}"
        )));
    }
    if alpha > n {
        return Err(Error::invalid(format!("alpha={alpha} exceeds n={n}")));
    }
    let gap = Rational::new((delta_max - delta_min) as i64, delta_max as i64);
    let second = r(n) / 2 + r(alpha) * gap / 2 - gap;
    Ok(second.max(r(alpha)))
}

/// `τ/2 + 1 ≤ n − Γ ≤ τ`.
pub fn co_gamma_bounds(n: usize, tau: usize, upper_gamma: usize) -> bool {
    let co = n as i64 - upper_gamma as i64;
    tau as i64 + 2 <= 2 * co && co <= tau as i64
}

/// Outcome of the co-bound check on a connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoBoundStatus {
    Holds,
    /// `Γ = α` and `τ ≤ 1` (a star or a single vertex): the lower bound
    /// `τ/2 + 1` is out of reach there.
    Boundary,
    Violated,
}

pub fn co_gamma_status(n: usize, tau: usize, alpha: usize, upper_gamma: usize) -> CoBoundStatus {
    if co_gamma_bounds(n, tau, upper_gamma) {
        CoBoundStatus::Holds
    } else if upper_gamma == alpha && tau <= 1 && n as i64 - upper_gamma as i64 <= tau as i64 {
        CoBoundStatus::Boundary
    } else {
        CoBoundStatus::Violated
    }
}

/// `Γ ≤ n/2` for regular graphs without isolated vertices.
pub fn regular_bound_holds(n: usize, upper_gamma: usize) -> bool {
    2 * upper_gamma <= n
}

/// Informational only: `α + ⌈(Δ−2)/(2Δ) · n⌉`.
pub fn zverovich_estimate(n: usize, alpha: usize, delta_max: usize) -> Option<usize> {
    if delta_max < 2 {
        return None;
    }
    let x = Rational::new((delta_max as i64 - 2) * n as i64, 2 * delta_max as i64);
    Some(alpha + x.ceil().to_integer() as usize)
}

/// `n` minus the size of a greedy maximal matching; an upper bound on α.
pub fn alpha_upper_estimate(g: &Graph) -> usize {
    let mut used = vec![false; g.n()];
    let mut m = 0;
    for (u, v) in g.edges() {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            m += 1;
        }
    }
    g.n() - m
}

/// True when no minimal dominating set can reach `target`, given any upper
/// bound `alpha_hat ≥ α`. Both bounds are monotone in α, so this is
/// admissible.
pub fn prune(n: usize, alpha_hat: usize, delta_max: usize, delta_min: usize, target: usize) -> bool {
    if n == 0 || alpha_hat == 0 {
        return target > 0;
    }
    let a = alpha_hat.min(n);
    let eq1 = gamma_upper_bound_exact(n, a).expect("checked range");
    let bound = if delta_max >= 1 {
        eq1.min(gamma_upper_bound_degree(n, a, delta_min, delta_max).expect("checked range"))
    } else {
        eq1
    };
    r(target) > bound
}
