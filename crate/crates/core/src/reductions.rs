//! Games built from LP data and the solve-an-LP-by-solving-a-game pipeline.
//!
//! The primal LP is `maximize cᵀx s.t. Ax ≤ b, x ≥ 0` and its dual is
//! `minimize yᵀb s.t. yᵀA ≥ cᵀ, y ≥ 0`. Dantzig's symmetric game
//!
//! ```text
//!     [  0    A   −b ]
//! B = [ −Aᵀ   0    c ]
//!     [  bᵀ  −cᵀ   0 ]
//! ```
//!
//! has strategies ordered `(y, x, t)`. Appending the row `(𝟙ᵀ, 𝟙ᵀ, −M)`
//! gives `B_M`, whose value is zero exactly when both LPs are feasible and
//! whose max-min strategies otherwise carry an infeasibility witness.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{ensure, Error, Result};
use crate::game::{solve_game, GameSolution, MixedStrategy, ZeroSumGame};
use crate::linalg::{Matrix, Vector};
use crate::rat::Rat;
use crate::simplex::{basic_min_w, simplex_solve, GeneralLP, RowSense, Sense, SimplexOutcome, VarKind};

pub const DEFAULT_BR_DIM_CAP: usize = 8;

/// An LP in inequality form: maximize `cᵀx` subject to `Ax ≤ b, x ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IneqLP {
    pub a: Matrix,
    pub b: Vector,
    pub c: Vector,
}

impl IneqLP {
    pub fn new(a: Matrix, b: Vector, c: Vector) -> Result<Self> {
        let (m, n) = a.shape();
        if m == 0 || n == 0 {
            return Err(Error::Dimension(format!("A must be nonempty, got {m}x{n}")));
        }
        if b.dim() != m || c.dim() != n {
            return Err(Error::Dimension(format!(
                "A is {m}x{n} but b has length {} and c has length {}",
                b.dim(),
                c.dim()
            )));
        }
        Ok(IneqLP { a, b, c })
    }

    pub fn from_i64(a: &[&[i64]], b: &[i64], c: &[i64]) -> Self {
        IneqLP::new(Matrix::from_i64(a), Vector::from_i64(b), Vector::from_i64(c)).expect("consistent dimensions")
    }

    /// Number of constraints.
    pub fn m(&self) -> usize {
        self.a.rows()
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn primal_lp(&self) -> GeneralLP {
        GeneralLP::new(Sense::Maximize, self.c.clone(), self.a.clone(), self.b.clone()).expect("consistent dimensions")
    }

    pub fn dual_lp(&self) -> GeneralLP {
        GeneralLP::new(Sense::Minimize, self.b.clone(), self.a.transpose(), self.c.clone())
            .and_then(|lp| lp.with_row_senses(vec![RowSense::Ge; self.n()]))
            .expect("consistent dimensions")
    }

    pub fn is_primal_feasible(&self, x: &Vector) -> bool {
        x.dim() == self.n() && x.is_nonneg() && self.a.mul_vec(x).le(&self.b)
    }

    pub fn is_dual_feasible(&self, y: &Vector) -> bool {
        y.dim() == self.m() && y.is_nonneg() && self.c.le(&self.a.vec_mul(y))
    }

    /// `Ax ≤ 0, x ≥ 0, Aᵀy ≥ 0, y ≥ 0, bᵀy − cᵀx < 0`.
    pub fn is_no_optimum_witness(&self, x: &Vector, y: &Vector) -> bool {
        x.dim() == self.n()
            && y.dim() == self.m()
            && x.is_nonneg()
            && y.is_nonneg()
            && self.a.mul_vec(x).is_nonpos()
            && self.a.vec_mul(y).is_nonneg()
            && (self.b.dot(y) - self.c.dot(x)).is_negative()
    }

    /// Entries of `A`, `b` and `c`.
    pub fn entries(&self) -> impl Iterator<Item = &Rat> {
        self.a.entries().chain(self.b.iter()).chain(self.c.iter())
    }
}

/// Outcome of solving the pair of LPs, with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpVerdict {
    /// Feasible `x` and `y` with `cᵀx = yᵀb = value`.
    OptimalPair { x: Vector, y: Vector, value: Rat },
    NoOptimum(NoOptimumWitness),
}

impl LpVerdict {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpVerdict::OptimalPair { .. })
    }

    pub fn value(&self) -> Option<&Rat> {
        match self {
            LpVerdict::OptimalPair { value, .. } => Some(value),
            LpVerdict::NoOptimum(_) => None,
        }
    }

    /// Re-checks the certificate against `lp`.
    pub fn verify(&self, lp: &IneqLP) -> bool {
        match self {
            LpVerdict::OptimalPair { x, y, value } => {
                lp.is_primal_feasible(x) && lp.is_dual_feasible(y) && &lp.c.dot(x) == value && &lp.b.dot(y) == value
            }
            LpVerdict::NoOptimum(w) => w.verify(lp),
        }
    }
}

/// `x, y` with `Ax ≤ 0, x ≥ 0, Aᵀy ≥ 0, y ≥ 0, bᵀy < cᵀx`: at least one
/// of the two LPs is infeasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoOptimumWitness {
    pub x: Vector,
    pub y: Vector,
    /// `cᵀx > 0`: `x` is an improving ray, so a feasible primal is unbounded.
    pub primal_unbounded_if_feasible: bool,
    /// `bᵀy < 0`: `y` is an improving ray, so a feasible dual is unbounded.
    pub dual_unbounded_if_feasible: bool,
}

impl NoOptimumWitness {
    pub fn new(lp: &IneqLP, x: Vector, y: Vector) -> Result<Self> {
        ensure!(lp.is_no_optimum_witness(&x, &y), "vectors ({x}, {y}) are not a no-optimum witness");
        let primal_unbounded_if_feasible = lp.c.dot(&x).is_positive();
        let dual_unbounded_if_feasible = lp.b.dot(&y).is_negative();
        ensure!(
            primal_unbounded_if_feasible || dual_unbounded_if_feasible,
            "witness violates the sign analysis"
        );
        Ok(NoOptimumWitness { x, y, primal_unbounded_if_feasible, dual_unbounded_if_feasible })
    }

    pub fn verify(&self, lp: &IneqLP) -> bool {
        lp.is_no_optimum_witness(&self.x, &self.y)
            && self.primal_unbounded_if_feasible == lp.c.dot(&self.x).is_positive()
            && self.dual_unbounded_if_feasible == lp.b.dot(&self.y).is_negative()
    }
}

/// Feasibility of both LPs decided directly by the simplex method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSolution {
    pub primal_feasible: bool,
    pub dual_feasible: bool,
    /// Present exactly when both sides are feasible.
    pub optimum: Option<LpVerdict>,
}

pub fn solve_direct(lp: &IneqLP) -> Result<DirectSolution> {
    let dual_feasible = || -> Result<bool> {
        let sys = GeneralLP::feasibility(
            lp.a.transpose(),
            vec![RowSense::Ge; lp.n()],
            lp.c.clone(),
            vec![VarKind::NonNeg; lp.m()],
        )?;
        Ok(simplex_solve(&sys)?.is_feasible())
    };
    Ok(match simplex_solve(&lp.primal_lp())? {
        SimplexOutcome::Optimal(opt) => {
            let verdict = LpVerdict::OptimalPair { x: opt.x, y: opt.y, value: opt.value };
            ensure!(verdict.verify(lp), "direct simplex optimum does not verify");
            DirectSolution { primal_feasible: true, dual_feasible: true, optimum: Some(verdict) }
        }
        SimplexOutcome::Unbounded { .. } => {
            DirectSolution { primal_feasible: true, dual_feasible: false, optimum: None }
        }
        SimplexOutcome::Infeasible { .. } => {
            DirectSolution { primal_feasible: false, dual_feasible: dual_feasible()?, optimum: None }
        }
    })
}

/// Dantzig's game `B`, of order `m + n + 1`.
pub fn build_dantzig(lp: &IneqLP) -> ZeroSumGame {
    let (m, n) = lp.a.shape();
    let b_col = Matrix::from_col_vector(&lp.b);
    let c_col = Matrix::from_col_vector(&lp.c);
    let top = Matrix::zeros(m, m).hstack(&lp.a).hstack(&b_col.neg());
    let middle = lp.a.transpose().neg().hstack(&Matrix::zeros(n, n)).hstack(&c_col);
    let bottom = Matrix::from_row_vector(&lp.b.concat(&lp.c.neg()).concat(&Vector::zeros(1)));
    let payoff = top.vstack(&middle).vstack(&bottom);
    debug_assert!(payoff.is_skew_symmetric());
    ZeroSumGame::new(payoff).expect("B is nonempty")
}

/// What an optimal strategy `z = (y, x, t)` of `B` says about the LPs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DantzigReading {
    /// `t > 0`: `(x/t, y/t)` is an optimal pair.
    OptimalPair { x: Vector, y: Vector, value: Rat },
    /// `t = 0` and `bᵀy < cᵀx`: `(x, y)` witnesses that some LP is infeasible.
    NoOptimumEvidence(NoOptimumWitness),
    /// `t = 0` and `bᵀy = cᵀx`: the strategy carries no information.
    Inconclusive,
}

pub fn interpret_dantzig(lp: &IneqLP, z: &MixedStrategy) -> Result<DantzigReading> {
    let (m, n) = lp.a.shape();
    let game = build_dantzig(lp);
    if z.probs().dim() != m + n + 1 {
        return Err(Error::Dimension(format!("strategy has {} entries, B has order {}", z.probs().dim(), m + n + 1)));
    }
    let bz = game.payoff().mul_vec(z.probs());
    if !bz.is_nonpos() {
        return Err(Error::NotOptimal(format!("Bz = {bz} has a positive entry")));
    }
    let y = z.probs().slice(0, m);
    let x = z.probs().slice(m, m + n);
    let t = z.probs()[m + n].clone();
    if t.is_positive() {
        let inv = t.recip();
        let (x, y) = (x.scale(&inv), y.scale(&inv));
        let value = lp.c.dot(&x);
        let verdict = LpVerdict::OptimalPair { x, y, value };
        ensure!(verdict.verify(lp), "scaled strategy is not an optimal pair");
        let LpVerdict::OptimalPair { x, y, value } = verdict else { unreachable!() };
        Ok(DantzigReading::OptimalPair { x, y, value })
    } else if bz[m + n].is_negative() {
        Ok(DantzigReading::NoOptimumEvidence(NoOptimumWitness::new(lp, x, y)?))
    } else {
        Ok(DantzigReading::Inconclusive)
    }
}

/// `M = ℓ!·ℓ·α^ℓ·β^(ℓ²+ℓ) + 1` with `ℓ = m + n + 1`, `α` the largest
/// absolute numerator and `β` the largest denominator among the entries.
pub fn bound_m(lp: &IneqLP) -> Rat {
    let ell = lp.m() + lp.n() + 1;
    let alpha = lp.entries().map(|e| e.numer().abs()).max().unwrap_or_else(BigInt::zero);
    let beta = lp.entries().map(|e| e.denom().clone()).max().unwrap_or_else(BigInt::one);
    let factorial: BigInt = (1..=ell).map(BigInt::from).product();
    let ell_u32 = u32::try_from(ell).expect("dimension fits in u32");
    let m = factorial * BigInt::from(ell) * alpha.pow(ell_u32) * beta.pow(ell_u32 * ell_u32 + ell_u32);
    Rat::from(m + BigInt::one())
}

/// The extended game `B_M`: `B` with the extra row `(𝟙ᵀ, 𝟙ᵀ, −M)`.
pub fn build_bm(lp: &IneqLP, m_bound: &Rat) -> Result<ZeroSumGame> {
    if !m_bound.is_positive() {
        return Err(Error::NonPositiveBound(Box::new(m_bound.clone())));
    }
    let k = lp.m() + lp.n();
    let last = Vector::ones(k).concat(&Vector::new(vec![-m_bound]));
    let payoff = build_dantzig(lp).into_payoff().vstack(&Matrix::from_row_vector(&last));
    ZeroSumGame::new(payoff)
}

/// `C = [[0, A], [−Aᵀ, 0]]` and `d = (b, −c)`, which turn `D_M` into `B_M`.
pub fn cd_from_lp(lp: &IneqLP) -> (Matrix, Vector) {
    let (m, n) = lp.a.shape();
    let top = Matrix::zeros(m, m).hstack(&lp.a);
    let bottom = lp.a.transpose().neg().hstack(&Matrix::zeros(n, n));
    (top.vstack(&bottom), lp.b.concat(&lp.c.neg()))
}

/// The smallest admissible bound `𝟙ᵀz* + 1` for the basic optimum `z*` of
/// `minimize w s.t. Cz − 𝟙w ≤ d, dᵀz − w ≤ 0, z ≥ 0, w ≥ 0`.
pub fn tight_bound(c: &Matrix, d: &Vector) -> Result<Rat> {
    Ok(basic_min_w(c, d)?.z.sum() + Rat::one())
}

/// `D_M = [[C, −d], [dᵀ, 0], [𝟙ᵀ, −M]]`.
pub fn build_dm(c: &Matrix, d: &Vector, m_bound: &Rat) -> Result<ZeroSumGame> {
    let required = tight_bound(c, d)?;
    if m_bound < &required {
        return Err(Error::BoundTooSmall { given: Box::new(m_bound.clone()), required: Box::new(required) });
    }
    let k = c.rows();
    let top = c.hstack(&Matrix::from_col_vector(&d.neg()));
    let mid = Matrix::from_row_vector(&d.concat(&Vector::zeros(1)));
    let last = Matrix::from_row_vector(&Vector::ones(k).concat(&Vector::new(vec![-m_bound])));
    ZeroSumGame::new(top.vstack(&mid).vstack(&last))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BmSolution {
    pub verdict: LpVerdict,
    pub game_value: Rat,
    pub m_bound: Rat,
    pub game: ZeroSumGame,
    pub solution: GameSolution,
}

/// Reads the witness off a max-min strategy `(y, x, r, s)` of `B_M` with
/// positive value `v`, checking `r = 0`, `s = v` and `0 < v < 1`.
pub fn bm_witness(lp: &IneqLP, row_strategy: &MixedStrategy, v: &Rat) -> Result<NoOptimumWitness> {
    let (m, n) = lp.a.shape();
    let p = row_strategy.probs();
    ensure!(p.dim() == m + n + 2, "max-min strategy of B_M has {} entries", p.dim());
    ensure!(v.is_positive() && v < &Rat::one(), "value {v} of B_M is not in (0, 1)");
    ensure!(p[m + n].is_zero(), "max-min strategy has r = {} ≠ 0", p[m + n]);
    ensure!(&p[m + n + 1] == v, "max-min strategy has s = {} ≠ v = {v}", p[m + n + 1]);
    NoOptimumWitness::new(lp, p.slice(m, m + n), p.slice(0, m))
}

/// Solves the LP pair through the game `B_M`. Without an explicit bound the
/// closed-form [`bound_m`] is used; an explicit bound must be at least the
/// tight bound of [`tight_bound`].
pub fn solve_lp_via_bm(lp: &IneqLP, m_bound: Option<&Rat>) -> Result<BmSolution> {
    let (m, n) = lp.a.shape();
    let m_bound = match m_bound {
        None => bound_m(lp),
        Some(given) => {
            if !given.is_positive() {
                return Err(Error::NonPositiveBound(Box::new(given.clone())));
            }
            let (c, d) = cd_from_lp(lp);
            let required = tight_bound(&c, &d)?;
            if given < &required {
                return Err(Error::BoundTooSmall { given: Box::new(given.clone()), required: Box::new(required) });
            }
            given.clone()
        }
    };
    let game = build_bm(lp, &m_bound)?;
    let solution = solve_game(&game)?;
    let v = solution.value.clone();
    ensure!(v.is_nonneg(), "B_M has negative value {v}");
    let verdict = if v.is_zero() {
        let z = solution.col_strategy.probs();
        let t = z[m + n].clone();
        ensure!(t.is_positive(), "min-max strategy of B_M has t = 0");
        let inv = t.recip();
        let x = z.slice(m, m + n).scale(&inv);
        let y = z.slice(0, m).scale(&inv);
        let value = lp.c.dot(&x);
        LpVerdict::OptimalPair { x, y, value }
    } else {
        LpVerdict::NoOptimum(bm_witness(lp, &solution.row_strategy, &v)?)
    };
    ensure!(verdict.verify(lp), "B_M verdict does not verify");
    Ok(BmSolution { verdict, game_value: v, m_bound, game, solution })
}

/// The LP `minimize w s.t. Ax̄ ≤ b + 𝟙w, −Aᵀȳ ≤ −c + 𝟙w, x̄, ȳ, w ≥ 0`
/// over `(x̄, ȳ, w)`.
pub fn min_slack_w_lp(lp: &IneqLP) -> GeneralLP {
    let (m, n) = lp.a.shape();
    let top = lp.a.hstack(&Matrix::zeros(m, m)).hstack(&Matrix::from_col_vector(&Vector::ones(m).neg()));
    let bottom = Matrix::zeros(n, n)
        .hstack(&lp.a.transpose().neg())
        .hstack(&Matrix::from_col_vector(&Vector::ones(n).neg()));
    GeneralLP::new(Sense::Minimize, Vector::unit(n + m + 1, n + m), top.vstack(&bottom), lp.b.concat(&lp.c.neg()))
        .expect("consistent dimensions")
}

/// Smallest uniform relaxation `w ≥ 0` making both LPs feasible, with the
/// relaxed solutions `x̄` and `ȳ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinSlack {
    pub w: Rat,
    pub x_bar: Vector,
    pub y_bar: Vector,
}

impl MinSlack {
    /// Feasibility of `(x̄, ȳ, w)` for the relaxed system.
    pub fn is_feasible(&self, lp: &IneqLP) -> bool {
        let shift = |k: usize| Vector::ones(k).scale(&self.w);
        self.x_bar.dim() == lp.n()
            && self.y_bar.dim() == lp.m()
            && self.w.is_nonneg()
            && self.x_bar.is_nonneg()
            && self.y_bar.is_nonneg()
            && lp.a.mul_vec(&self.x_bar).le(&lp.b.add(&shift(lp.m())))
            && lp.a.vec_mul(&self.y_bar).neg().le(&lp.c.neg().add(&shift(lp.n())))
    }
}

pub fn min_slack(lp: &IneqLP) -> Result<MinSlack> {
    let (m, n) = lp.a.shape();
    let SimplexOutcome::Optimal(opt) = simplex_solve(&min_slack_w_lp(lp))? else {
        return Err(Error::Verification("relaxation LP has no optimum".into()));
    };
    let out = MinSlack { w: opt.value, x_bar: opt.x.slice(0, n), y_bar: opt.x.slice(n, n + m) };
    ensure!(out.is_feasible(lp), "relaxed solution is infeasible");
    Ok(out)
}

/// Smallest uniform relaxation `w ≥ 0` making both LPs feasible.
pub fn min_slack_w(lp: &IneqLP) -> Result<Rat> {
    Ok(min_slack(lp)?.w)
}

/// `w = (M + 1)/(1/v − 1)` for a positive value `v < 1` of `B_M`.
pub fn w_from_value(m_bound: &Rat, v: &Rat) -> Rat {
    (m_bound + &Rat::one()) / (v.recip() - Rat::one())
}

/// Brooks and Reny's game and its scale factor `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrooksReny {
    pub game: ZeroSumGame,
    pub alpha: Rat,
}

/// `Â = [[0, −Aᵀ], [A, 0], [−cᵀ, bᵀ]]`, with columns ordered `(x, y)`.
pub fn hat_a(lp: &IneqLP) -> Matrix {
    let (m, n) = lp.a.shape();
    let top = Matrix::zeros(n, n).hstack(&lp.a.transpose().neg());
    let mid = lp.a.hstack(&Matrix::zeros(m, m));
    let last = Matrix::from_row_vector(&lp.c.neg().concat(&lp.b));
    top.vstack(&mid).vstack(&last)
}

/// Largest entry in absolute value over the inverses of all invertible
/// square submatrices, or zero if there are none.
fn max_inverse_norm(a: &Matrix) -> Rat {
    let (rows, cols) = a.shape();
    let mut best = Rat::zero();
    for k in 1..=rows.min(cols) {
        for r in (0..rows).combinations(k) {
            for c in (0..cols).combinations(k) {
                if let Some(inv) = a.submatrix(&r, &c).inverse() {
                    best = best.max(inv.max_abs());
                }
            }
        }
    }
    best
}

pub fn build_brooks_reny(lp: &IneqLP, cap: usize) -> Result<BrooksReny> {
    let (m, n) = lp.a.shape();
    let size = m + n + 1;
    if size > cap {
        return Err(Error::CapExceeded { what: "Brooks-Reny submatrix enumeration", size, cap });
    }
    let hat = hat_a(lp);
    let r = Rat::from(hat.rank());
    let norm_bc = lp.b.iter().chain(lp.c.iter()).map(Rat::abs).max().unwrap_or_else(Rat::zero);
    let alpha = Rat::from(2) * &r * &r * norm_bc * max_inverse_norm(&hat) + Rat::one();

    let scaled = hat.scale(&alpha).hstack(&Matrix::zeros(size, 1));
    let shift = lp.c.concat(&lp.b.neg()).concat(&Vector::zeros(1));
    let payoff = Matrix::from_fn(size, size, |i, j| &scaled[(i, j)] + &shift[i]);
    Ok(BrooksReny { game: ZeroSumGame::new(payoff)?, alpha })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrooksRenySolution {
    pub verdict: LpVerdict,
    pub game_value: Rat,
    pub alpha: Rat,
    pub solution: GameSolution,
}

/// Solves `P`: value zero yields the optimal pair `(αx*, αy*)` from the
/// min-max strategy, a positive value yields a witness from the max-min one.
pub fn solve_lp_via_brooks_reny(lp: &IneqLP, cap: usize) -> Result<BrooksRenySolution> {
    let (m, n) = lp.a.shape();
    let BrooksReny { game, alpha } = build_brooks_reny(lp, cap)?;
    let solution = solve_game(&game)?;
    let v = solution.value.clone();
    let verdict = if v.is_zero() {
        let z = solution.col_strategy.probs();
        let x = z.slice(0, n).scale(&alpha);
        let y = z.slice(n, n + m).scale(&alpha);
        let value = lp.c.dot(&x);
        LpVerdict::OptimalPair { x, y, value }
    } else {
        ensure!(v.is_positive(), "Brooks-Reny game has negative value {v}");
        let p = solution.row_strategy.probs();
        LpVerdict::NoOptimum(NoOptimumWitness::new(lp, p.slice(0, n), p.slice(n, n + m))?)
    };
    ensure!(verdict.verify(lp), "Brooks-Reny verdict does not verify");
    Ok(BrooksRenySolution { verdict, game_value: v, alpha, solution })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use proptest::prelude::*;

    fn i1() -> IneqLP {
        IneqLP::from_i64(&[&[2]], &[1], &[3])
    }

    fn i2() -> IneqLP {
        IneqLP::from_i64(&[&[0, 1]], &[1], &[0, 1])
    }

    fn i3() -> IneqLP {
        IneqLP::from_i64(&[&[1]], &[-1], &[1])
    }

    fn zero_lp() -> IneqLP {
        IneqLP::from_i64(&[&[0]], &[0], &[0])
    }

    #[test]
    fn dantzig_examples() {
        assert_eq!(*build_dantzig(&i1()).payoff(), Matrix::from_i64(&[&[0, 2, -1], &[-2, 0, 3], &[1, -3, 0]]));
        let b2 = build_dantzig(&i2());
        assert_eq!(b2.rows(), 4);
        assert!(b2.payoff().row(1).iter().all(Rat::is_zero));
        assert!(b2.payoff().col(1).is_zero());
        assert!(build_dantzig(&zero_lp()).payoff().is_zero());
    }

    #[test]
    fn interpret_examples() {
        let lp = i1();
        let sol = solve_game(&build_dantzig(&lp)).unwrap();
        assert_eq!(
            interpret_dantzig(&lp, &sol.col_strategy).unwrap(),
            DantzigReading::OptimalPair { x: Vector::new(vec![rat!(1, 2)]), y: Vector::new(vec![rat!(3, 2)]), value: rat!(3, 2) }
        );
        assert_eq!(interpret_dantzig(&i2(), &MixedStrategy::pure(4, 1)).unwrap(), DantzigReading::Inconclusive);

        let lp = i3();
        let sol = solve_game(&build_dantzig(&lp)).unwrap();
        assert!(matches!(interpret_dantzig(&lp, &sol.row_strategy).unwrap(), DantzigReading::NoOptimumEvidence(_)));
        assert!(matches!(interpret_dantzig(&lp, &MixedStrategy::pure(3, 2)), Err(Error::NotOptimal(_))));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(bound_m(&i3()), rat!(19));
        assert_eq!(bound_m(&i1()), rat!(487));
        let half = IneqLP::new(Matrix::from_fn(1, 1, |_, _| rat!(1, 2)), Vector::from_i64(&[1]), Vector::from_i64(&[1])).unwrap();
        assert_eq!(bound_m(&half), rat!(73729));
        assert_eq!(bound_m(&zero_lp()), rat!(1));
    }

    #[test]
    fn bm_examples() {
        let g = build_bm(&i3(), &rat!(19)).unwrap();
        assert_eq!(*g.payoff(), Matrix::from_i64(&[&[0, 1, 1], &[-1, 0, 1], &[-1, -1, 0], &[1, 1, -19]]));
        let g = build_bm(&i1(), &rat!(487)).unwrap();
        assert_eq!(g.payoff().select_rows(&[0, 1, 2]), *build_dantzig(&i1()).payoff());
        let g = build_bm(&zero_lp(), &rat!(1)).unwrap();
        assert_eq!(g.payoff().row_vector(3), Vector::from_i64(&[1, 1, -1]));
        assert!(matches!(build_bm(&i1(), &rat!(0)), Err(Error::NonPositiveBound(_))));
    }

    #[test]
    fn dm_examples() {
        let (c, d) = cd_from_lp(&i3());
        assert_eq!(build_dm(&c, &d, &rat!(19)).unwrap(), build_bm(&i3(), &rat!(19)).unwrap());
        assert_eq!(basic_min_w(&c, &d).unwrap().w, rat!(1));

        let g = build_dm(&Matrix::zeros(2, 2), &Vector::from_i64(&[1, 1]), &rat!(2)).unwrap();
        assert_eq!(solve_game(&g).unwrap().value, rat!(0));

        let c = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
        let g = build_dm(&c, &Vector::zeros(2), &rat!(2)).unwrap();
        assert_eq!(*g.payoff(), Matrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0], &[1, 1, -2]]));

        assert!(matches!(build_dm(&Matrix::from_i64(&[&[1]]), &Vector::zeros(1), &rat!(2)), Err(Error::NotSkewSymmetric)));
    }

    #[test]
    fn dm_rejects_small_bound() {
        // any z* for this system has 𝟙ᵀz* ≥ 1 because d = (b, −c) forces x̄ ≥ 1
        let lp = IneqLP::from_i64(&[&[1]], &[3], &[1]);
        let (c, d) = cd_from_lp(&lp);
        let required = tight_bound(&c, &d).unwrap();
        assert!(required > rat!(1));
        let too_small = &required - &rat!(1, 2);
        assert!(matches!(build_dm(&c, &d, &too_small), Err(Error::BoundTooSmall { .. })));
        assert!(matches!(solve_lp_via_bm(&lp, Some(&too_small)), Err(Error::BoundTooSmall { .. })));
    }

    #[test]
    fn pipeline_examples() {
        let s = solve_lp_via_bm(&i1(), None).unwrap();
        assert_eq!(s.game_value, rat!(0));
        assert_eq!(
            s.verdict,
            LpVerdict::OptimalPair { x: Vector::new(vec![rat!(1, 2)]), y: Vector::new(vec![rat!(3, 2)]), value: rat!(3, 2) }
        );

        let s = solve_lp_via_bm(&i2(), None).unwrap();
        assert_eq!(s.game_value, rat!(0));
        assert_eq!(s.verdict.value(), Some(&rat!(1)));

        let s = solve_lp_via_bm(&i3(), Some(&rat!(19))).unwrap();
        assert_eq!(s.game_value, rat!(1, 21));
        let LpVerdict::NoOptimum(w) = &s.verdict else { panic!("expected no optimum") };
        assert!(w.y[0].is_positive());
        assert!(w.dual_unbounded_if_feasible);
        assert_eq!(w_from_value(&rat!(19), &s.game_value), min_slack_w(&i3()).unwrap());
    }

    #[test]
    fn min_slack_examples() {
        assert_eq!(min_slack_w(&i3()).unwrap(), rat!(1));
        assert_eq!(min_slack_w(&i1()).unwrap(), rat!(0));
        assert_eq!(min_slack_w(&i2()).unwrap(), rat!(0));
    }

    #[test]
    fn brooks_reny_examples() {
        let s = solve_lp_via_brooks_reny(&i3(), DEFAULT_BR_DIM_CAP).unwrap();
        assert!(s.game_value.is_positive());
        assert!(!s.verdict.is_optimal());

        let s = solve_lp_via_brooks_reny(&i1(), DEFAULT_BR_DIM_CAP).unwrap();
        assert_eq!(s.game_value, rat!(0));
        assert_eq!(s.verdict.value(), Some(&rat!(3, 2)));

        let s = solve_lp_via_brooks_reny(&zero_lp(), DEFAULT_BR_DIM_CAP).unwrap();
        assert_eq!(s.alpha, rat!(1));
        assert_eq!(s.game_value, rat!(0));
        // every pair of nonnegative vectors is optimal for the zero LP
        assert_eq!(s.verdict.value(), Some(&rat!(0)));
        assert!(s.verdict.verify(&zero_lp()));

        let big = IneqLP::new(Matrix::zeros(4, 4), Vector::zeros(4), Vector::zeros(4)).unwrap();
        assert!(matches!(build_brooks_reny(&big, DEFAULT_BR_DIM_CAP), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn direct_classification() {
        let d = solve_direct(&i3()).unwrap();
        assert!(!d.primal_feasible && d.dual_feasible);
        let d = solve_direct(&IneqLP::from_i64(&[&[-1]], &[1], &[1])).unwrap();
        assert!(d.primal_feasible && !d.dual_feasible);
        let d = solve_direct(&i1()).unwrap();
        assert_eq!(d.optimum.unwrap().value(), Some(&rat!(3, 2)));
    }

    fn random_lp() -> impl Strategy<Value = IneqLP> {
        (1usize..=3, 1usize..=3).prop_flat_map(|(m, n)| {
            proptest::collection::vec(-6i64..=6, m * n + m + n).prop_map(move |v| {
                let h = |k: usize| Rat::new(v[k], 2);
                IneqLP::new(
                    Matrix::from_fn(m, n, |i, j| h(i * n + j)),
                    (0..m).map(|i| h(m * n + i)).collect(),
                    (0..n).map(|j| h(m * n + m + j)).collect(),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn dantzig_is_symmetric_with_value_zero(lp in random_lp()) {
            let g = build_dantzig(&lp);
            prop_assert!(g.payoff().is_skew_symmetric());
            prop_assert!(solve_game(&g).unwrap().value.is_zero());
        }

        #[test]
        fn bm_agrees_with_direct_simplex(lp in random_lp()) {
            let direct = solve_direct(&lp).unwrap();
            let s = solve_lp_via_bm(&lp, None).unwrap();
            prop_assert_eq!(s.verdict.is_optimal(), direct.primal_feasible && direct.dual_feasible);
            match direct.optimum {
                Some(opt) => {
                    prop_assert!(s.game_value.is_zero());
                    prop_assert_eq!(s.verdict.value(), opt.value());
                }
                None => {
                    prop_assert!(s.game_value.is_positive() && s.game_value < Rat::one());
                    prop_assert_eq!(w_from_value(&s.m_bound, &s.game_value), min_slack_w(&lp).unwrap());
                }
            }
        }

        #[test]
        fn tight_bound_gives_same_verdict(lp in random_lp()) {
            let (c, d) = cd_from_lp(&lp);
            let tight = tight_bound(&c, &d).unwrap();
            prop_assert!(tight <= bound_m(&lp));
            let s = solve_lp_via_bm(&lp, Some(&tight)).unwrap();
            let reference = solve_lp_via_bm(&lp, None).unwrap();
            prop_assert_eq!(s.verdict.value(), reference.verdict.value());
            prop_assert_eq!(s.verdict.is_optimal(), reference.verdict.is_optimal());
            prop_assert_eq!(build_dm(&c, &d, &tight).unwrap(), build_bm(&lp, &tight).unwrap());
        }

        #[test]
        fn brooks_reny_agrees_with_bm(lp in random_lp()) {
            prop_assume!(lp.m() + lp.n() < 6);
            let br = solve_lp_via_brooks_reny(&lp, DEFAULT_BR_DIM_CAP).unwrap();
            let bm = solve_lp_via_bm(&lp, None).unwrap();
            prop_assert_eq!(br.verdict.is_optimal(), bm.verdict.is_optimal());
            prop_assert_eq!(br.verdict.value(), bm.verdict.value());
            prop_assert_eq!(br.game_value.is_zero(), bm.game_value.is_zero());
        }
    }
}
