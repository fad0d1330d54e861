//! Independent infeasibility oracles for `Ax ≤ b` with free variables:
//! Fourier–Motzkin elimination and minimally infeasible subsystems.

use crate::alternative::Alternative;
use crate::certificates::{farkas, is_farkas_right, FarkasVariant};
use crate::error::{ensure, Error, Result};
use crate::linalg::{solve_or_refute, Matrix, Vector};
use crate::rat::Rat;

pub const DEFAULT_FM_ROW_CAP: usize = 10_000;

/// A derived inequality `coeffsᵀx ≤ rhs` with `multᵀA = coeffsᵀ` and
/// `multᵀb = rhs` for the nonnegative multipliers `mult`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Derived {
    coeffs: Vector,
    rhs: Rat,
    mult: Vector,
}

impl Derived {
    fn combine(p: &Derived, p_scale: &Rat, q: &Derived, q_scale: &Rat) -> Derived {
        Derived {
            coeffs: p.coeffs.scale(p_scale).add(&q.coeffs.scale(q_scale)),
            rhs: &p.rhs * p_scale + &q.rhs * q_scale,
            mult: p.mult.scale(p_scale).add(&q.mult.scale(q_scale)),
        }
    }
}

/// Eliminates `x_0, x_1, …` in turn. Returns a feasible point, found by
/// back-substitution (midpoint of a two-sided interval, the finite end of a
/// one-sided one, zero when unconstrained), or `y ≥ 0` with `yᵀA = 0ᵀ` and
/// `yᵀb < 0` read from the multipliers of a derived `0 ≤ negative` row.
/// Fails with `CapExceeded` when a stage has more than `row_cap` rows.
pub fn fourier_motzkin(a: &Matrix, b: &Vector, row_cap: usize) -> Result<Alternative<Vector, Vector>> {
    let (m, n) = a.shape();
    if b.dim() != m {
        return Err(Error::Dimension(format!("A has {m} rows but b has length {}", b.dim())));
    }
    if m > row_cap {
        return Err(Error::CapExceeded { what: "Fourier-Motzkin rows", size: m, cap: row_cap });
    }
    let mut stages: Vec<Vec<Derived>> = Vec::with_capacity(n + 1);
    let mut rows: Vec<Derived> = (0..m)
        .map(|i| Derived { coeffs: a.row_vector(i), rhs: b[i].clone(), mult: Vector::unit(m, i) })
        .collect();
    for k in 0..n {
        let mut next: Vec<Derived> = Vec::new();
        let push = |row: Derived, next: &mut Vec<Derived>| {
            if !next.iter().any(|r| r.coeffs == row.coeffs && r.rhs == row.rhs) {
                next.push(row);
            }
        };
        for r in rows.iter().filter(|r| r.coeffs[k].is_zero()) {
            push(r.clone(), &mut next);
        }
        for p in rows.iter().filter(|r| r.coeffs[k].is_positive()) {
            for q in rows.iter().filter(|r| r.coeffs[k].is_negative()) {
                let row = Derived::combine(p, &p.coeffs[k].recip(), q, &q.coeffs[k].abs().recip());
                push(row, &mut next);
                if next.len() > row_cap {
                    return Err(Error::CapExceeded { what: "Fourier-Motzkin rows", size: next.len(), cap: row_cap });
                }
            }
        }
        stages.push(std::mem::replace(&mut rows, next));
    }
    if let Some(bad) = rows.iter().find(|r| r.rhs.is_negative()) {
        let y = bad.mult.clone();
        ensure!(is_farkas_right(a, b, FarkasVariant::IneqFree, &y), "Fourier-Motzkin multipliers fail");
        return Ok(Alternative::Right(y));
    }
    let mut x = Vector::zeros(n);
    for k in (0..n).rev() {
        let mut lower: Option<Rat> = None;
        let mut upper: Option<Rat> = None;
        for r in &stages[k] {
            let ak = &r.coeffs[k];
            if ak.is_zero() {
                continue;
            }
            let rest: Rat = ((k + 1)..n).map(|j| &r.coeffs[j] * &x[j]).sum();
            let bound = (&r.rhs - &rest) / ak;
            if ak.is_positive() {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            } else {
                lower = Some(lower.map_or(bound.clone(), |l| l.max(bound)));
            }
        }
        x[k] = match (lower, upper) {
            (Some(l), Some(u)) => {
                ensure!(l <= u, "empty interval for x_{k} during back-substitution");
                (l + u) / Rat::from(2)
            }
            (Some(l), None) => l,
            (None, Some(u)) => u,
            (None, None) => Rat::zero(),
        };
    }
    ensure!(a.mul_vec(&x).le(b), "Fourier-Motzkin point is infeasible");
    Ok(Alternative::Left(x))
}

/// A minimally infeasible subsystem with its certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IisResult {
    /// Row indices of the subsystem, ascending.
    pub rows: Vec<usize>,
    /// `y ≥ 0` over all rows with `yᵀA = 0ᵀ`, `yᵀb = −1`, positive exactly
    /// on `rows`.
    pub y: Vector,
    /// For each row `i` of the subsystem, `x⁽ⁱ⁾` with `a_i x⁽ⁱ⁾ > b_i` and
    /// `a_k x⁽ⁱ⁾ = b_k` for the other rows `k` of the subsystem.
    pub witnesses: Vec<(usize, Vector)>,
}

impl IisResult {
    pub fn verify(&self, a: &Matrix, b: &Vector) -> bool {
        let m = a.rows();
        let in_rows = |i: usize| self.rows.contains(&i);
        self.y.dim() == m
            && is_farkas_right(a, b, FarkasVariant::IneqFree, &self.y)
            && (0..m).all(|i| self.y[i].is_positive() == in_rows(i))
            && self.witnesses.len() == self.rows.len()
            && self.witnesses.iter().zip(&self.rows).all(|((i, x), r)| {
                i == r
                    && x.dim() == a.cols()
                    && self.rows.iter().all(|&k| {
                        let slack = Vector::new(a.row(k).to_vec()).dot(x) - &b[k];
                        if k == *i {
                            (&self.y[k] * &slack) == Rat::one()
                        } else {
                            slack.is_zero()
                        }
                    })
            })
    }
}

fn is_feasible(a: &Matrix, b: &Vector) -> Result<bool> {
    Ok(farkas(a, b, FarkasVariant::IneqFree)?.is_left())
}

/// Greedy deletion in ascending row order: a row is dropped whenever the
/// remaining rows stay infeasible.
pub fn shrink_minimal_infeasible(a: &Matrix, b: &Vector) -> Result<IisResult> {
    let (m, n) = a.shape();
    if b.dim() != m {
        return Err(Error::Dimension(format!("A has {m} rows but b has length {}", b.dim())));
    }
    if is_feasible(a, b)? {
        return Err(Error::FeasibleInput);
    }
    let mut keep: Vec<usize> = (0..m).collect();
    for i in 0..m {
        let trial: Vec<usize> = keep.iter().copied().filter(|&r| r != i).collect();
        if !is_feasible(&a.select_rows(&trial), &b.select(&trial))? {
            keep = trial;
        }
    }
    let sub_a = a.select_rows(&keep);
    let sub_b = b.select(&keep);
    // yᵀ[A_S  −b_S] = [0ᵀ 1]
    let system = sub_a.hstack(&Matrix::from_col_vector(&sub_b.neg())).transpose();
    let Alternative::Left(y_sub) = solve_or_refute(&system, &Vector::unit(n + 1, n))? else {
        return Err(Error::Verification("no certificate for the minimal subsystem".into()));
    };
    ensure!(y_sub.is_positive(), "certificate {y_sub} of a minimal subsystem is not positive");
    let mut y = Vector::zeros(m);
    for (t, &i) in keep.iter().enumerate() {
        y[i] = y_sub[t].clone();
    }
    let mut witnesses = Vec::with_capacity(keep.len());
    for (t, &i) in keep.iter().enumerate() {
        let others: Vec<usize> = (0..keep.len()).filter(|&s| s != t).collect();
        let Alternative::Left(x) = solve_or_refute(&sub_a.select_rows(&others), &sub_b.select(&others))? else {
            return Err(Error::Verification(format!("equalities without row {i} are inconsistent")));
        };
        ensure!(Vector::new(a.row(i).to_vec()).dot(&x) > b[i], "reversal witness for row {i} fails");
        witnesses.push((i, x));
    }
    let out = IisResult { rows: keep, y, witnesses };
    ensure!(out.verify(a, b), "minimally infeasible subsystem fails verification");
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinFeasReport {
    /// `Ax = b` has no solution.
    pub equalities_infeasible: bool,
    /// For each row `i`: the equalities without row `i` have a solution.
    pub removal_feasible: Vec<bool>,
    pub pass: bool,
    /// First row whose removal leaves the equalities infeasible.
    pub removable_row: Option<usize>,
}

/// For a minimally infeasible `Ax ≤ b`, the equality system `Ax = b` is
/// minimally infeasible as well; this checks both parts with exact
/// elimination.
pub fn check_minfeas_equalities(a: &Matrix, b: &Vector) -> Result<MinFeasReport> {
    let m = a.rows();
    if b.dim() != m {
        return Err(Error::Dimension(format!("A has {m} rows but b has length {}", b.dim())));
    }
    let equalities_infeasible = solve_or_refute(a, b)?.is_right();
    let removal_feasible = (0..m)
        .map(|i| {
            let others: Vec<usize> = (0..m).filter(|&k| k != i).collect();
            Ok(solve_or_refute(&a.select_rows(&others), &b.select(&others))?.is_left())
        })
        .collect::<Result<Vec<bool>>>()?;
    let removable_row = removal_feasible.iter().position(|f| !f);
    Ok(MinFeasReport {
        pass: equalities_infeasible && removable_row.is_none(),
        equalities_infeasible,
        removal_feasible,
        removable_row,
    })
}
