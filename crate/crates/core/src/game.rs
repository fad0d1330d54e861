//! Zero-sum matrix games solved exactly.
//!
//! The row player maximizes, the column player minimizes. [`solve_game`]
//! solves the min-max LP `minimize v s.t. Ax ≤ 𝟙v, x ∈ X` with `v` free and
//! reads the max-min strategy off its dual. [`enumerate_optimal_supports`]
//! is an independent brute-force route that does not touch the simplex code.

use itertools::Itertools;

use crate::error::{ensure, Error, Result};
use crate::linalg::{solve_unique, Matrix, Vector};
use crate::rat::Rat;
use crate::simplex::{simplex_solve, GeneralLP, RowSense, Sense, SimplexOutcome, VarKind};

pub const DEFAULT_ENUM_DIM_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumGame {
    payoff: Matrix,
}

impl ZeroSumGame {
    pub fn new(payoff: Matrix) -> Result<Self> {
        if payoff.rows() == 0 || payoff.cols() == 0 {
            return Err(Error::Dimension(format!(
                "a game needs at least one row and one column, got {}x{}",
                payoff.rows(),
                payoff.cols()
            )));
        }
        Ok(ZeroSumGame { payoff })
    }

    pub fn payoff(&self) -> &Matrix {
        &self.payoff
    }

    pub fn into_payoff(self) -> Matrix {
        self.payoff
    }

    pub fn rows(&self) -> usize {
        self.payoff.rows()
    }

    pub fn cols(&self) -> usize {
        self.payoff.cols()
    }

    pub fn is_symmetric(&self) -> bool {
        self.payoff.is_skew_symmetric()
    }
}

/// A probability vector: nonnegative entries summing to exactly one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedStrategy(Vector);

impl MixedStrategy {
    pub fn new(probs: Vector) -> Result<Self> {
        if probs.dim() == 0 {
            return Err(Error::InvalidStrategy("empty strategy".into()));
        }
        if !probs.is_nonneg() {
            return Err(Error::InvalidStrategy(format!("negative entry in {probs}")));
        }
        let total = probs.sum();
        if total != 1 {
            return Err(Error::InvalidStrategy(format!("entries of {probs} sum to {total}")));
        }
        Ok(MixedStrategy(probs))
    }

    pub fn pure(n: usize, i: usize) -> Self {
        MixedStrategy(Vector::unit(n, i))
    }

    pub fn uniform(n: usize) -> Self {
        MixedStrategy(Vector::ones(n).scale(&Rat::from(n).recip()))
    }

    pub fn probs(&self) -> &Vector {
        &self.0
    }

    pub fn into_vector(self) -> Vector {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSolution {
    pub value: Rat,
    /// Max-min strategy `y` of the row player.
    pub row_strategy: MixedStrategy,
    /// Min-max strategy `x` of the column player.
    pub col_strategy: MixedStrategy,
}

/// `max_i (Ax)_i`, the payoff of a best response against `x`.
pub fn best_response_value(game: &ZeroSumGame, x: &MixedStrategy) -> Result<Rat> {
    if x.probs().dim() != game.cols() {
        return Err(Error::Dimension(format!(
            "strategy has {} entries, game has {} columns",
            x.probs().dim(),
            game.cols()
        )));
    }
    Ok(Vector::max(&game.payoff.mul_vec(x.probs())).cloned().expect("nonempty game"))
}

/// `min_j (yᵀA)_j`, the cost of a best response against `y`.
pub fn best_response_cost(game: &ZeroSumGame, y: &MixedStrategy) -> Result<Rat> {
    if y.probs().dim() != game.rows() {
        return Err(Error::Dimension(format!(
            "strategy has {} entries, game has {} rows",
            y.probs().dim(),
            game.rows()
        )));
    }
    Ok(Vector::min(&game.payoff.vec_mul(y.probs())).cloned().expect("nonempty game"))
}

/// Adds `alpha` to every payoff.
pub fn shift_payoffs(game: &ZeroSumGame, alpha: &Rat) -> ZeroSumGame {
    ZeroSumGame { payoff: game.payoff.add_scalar(alpha) }
}

/// The min-max LP over `(x, v)`.
pub fn minmax_lp(game: &ZeroSumGame) -> GeneralLP {
    let (m, n) = game.payoff.shape();
    let top = game.payoff.hstack(&Matrix::from_col_vector(&Vector::ones(m).neg()));
    let bottom = Matrix::from_row_vector(&Vector::ones(n).concat(&Vector::zeros(1)));
    let a = top.vstack(&bottom);
    let mut senses = vec![RowSense::Le; m];
    senses.push(RowSense::Eq);
    let mut kinds = vec![VarKind::NonNeg; n];
    kinds.push(VarKind::Free);
    GeneralLP::new(Sense::Minimize, Vector::unit(n + 1, n), a, Vector::unit(m + 1, m))
        .and_then(|lp| lp.with_row_senses(senses))
        .and_then(|lp| lp.with_var_kinds(kinds))
        .expect("min-max LP is well formed")
}

pub fn solve_game(game: &ZeroSumGame) -> Result<GameSolution> {
    let (m, n) = game.payoff.shape();
    let lp = minmax_lp(game);
    let SimplexOutcome::Optimal(opt) = simplex_solve(&lp)? else {
        return Err(Error::Verification("min-max LP has no optimum".into()));
    };
    let value = opt.x[n].clone();
    let x = opt.x.slice(0, n);
    let y = opt.y.slice(0, m).neg();
    ensure!(opt.y[m] == value, "max-min value {} differs from min-max value {value}", opt.y[m]);
    let row_strategy = MixedStrategy::new(y).map_err(|e| Error::Verification(e.to_string()))?;
    let col_strategy = MixedStrategy::new(x).map_err(|e| Error::Verification(e.to_string()))?;
    let sol = GameSolution { value, row_strategy, col_strategy };
    ensure!(is_optimal_pair(game, &sol), "game solution does not verify");
    if game.is_symmetric() {
        ensure!(sol.value.is_zero(), "symmetric game with value {}", sol.value);
    }
    Ok(sol)
}

/// `yᵀA ≥ value·𝟙ᵀ` and `Ax ≤ value·𝟙`.
pub fn is_optimal_pair(game: &ZeroSumGame, sol: &GameSolution) -> bool {
    sol.row_strategy.probs().dim() == game.rows()
        && sol.col_strategy.probs().dim() == game.cols()
        && game.payoff.vec_mul(sol.row_strategy.probs()).iter().all(|p| p >= &sol.value)
        && game.payoff.mul_vec(sol.col_strategy.probs()).iter().all(|p| p <= &sol.value)
}

/// Vertex optimal strategies of both players. Every row vertex paired with
/// every column vertex is an optimal pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalVertices {
    pub value: Rat,
    pub row_vertices: Vec<MixedStrategy>,
    pub col_vertices: Vec<MixedStrategy>,
}

impl OptimalVertices {
    pub fn pairs(&self) -> impl Iterator<Item = (&MixedStrategy, &MixedStrategy)> {
        self.row_vertices.iter().cartesian_product(self.col_vertices.iter())
    }
}

/// Game value by enumerating square kernels `A_IJ`: solve the equalizing
/// systems for both players on the kernel and keep the first pair that is
/// optimal in the full game. Some kernel always works, so this never fails
/// on a nonempty game.
pub fn value_by_kernels(game: &ZeroSumGame) -> Result<Rat> {
    let a = &game.payoff;
    let (m, n) = a.shape();
    for k in 1..=m.min(n) {
        for rows in (0..m).combinations(k) {
            for cols in (0..n).combinations(k) {
                let sub = a.submatrix(&rows, &cols);
                let Some((x, v)) = equalize(&sub) else { continue };
                let Some((y, u)) = equalize(&sub.transpose()) else { continue };
                if u != v || !x.is_nonneg() || !y.is_nonneg() {
                    continue;
                }
                let mut full_x = Vector::zeros(n);
                for (t, &j) in cols.iter().enumerate() {
                    full_x[j] = x[t].clone();
                }
                let mut full_y = Vector::zeros(m);
                for (t, &i) in rows.iter().enumerate() {
                    full_y[i] = y[t].clone();
                }
                if a.mul_vec(&full_x).iter().all(|p| p <= &v)
                    && a.vec_mul(&full_y).iter().all(|p| p >= &v)
                {
                    return Ok(v);
                }
            }
        }
    }
    Err(Error::Verification("no kernel yields an optimal pair".into()))
}

/// Solves `Mx = 𝟙v, 𝟙ᵀx = 1` uniquely.
fn equalize(sub: &Matrix) -> Option<(Vector, Rat)> {
    let k = sub.rows();
    let top = sub.hstack(&Matrix::from_col_vector(&Vector::ones(k).neg()));
    let bottom = Matrix::from_row_vector(&Vector::ones(sub.cols()).concat(&Vector::zeros(1)));
    let sol = solve_unique(&top.vstack(&bottom), &Vector::unit(k + 1, k))?;
    let v = sol[sub.cols()].clone();
    Some((sol.slice(0, sub.cols()), v))
}

/// Vertices of `{x ∈ X : Mx ≤ 𝟙·bound}`: each vertex with support inside
/// `J` is the unique solution of `|J| − 1` tight rows plus `𝟙ᵀx = 1`.
fn simplex_face_vertices(m: &Matrix, bound: &Rat) -> Vec<MixedStrategy> {
    let (rows, n) = m.shape();
    let mut out = Vec::new();
    for size in 1..=n {
        for support in (0..n).combinations(size) {
            let sub = m.select_cols(&support);
            for tight in (0..rows).combinations(size - 1) {
                let sys = sub.select_rows(&tight).vstack(&Matrix::from_row_vector(&Vector::ones(size)));
                let mut rhs = Vector::ones(size).scale(bound);
                rhs[size - 1] = Rat::one();
                let Some(xs) = solve_unique(&sys, &rhs) else { continue };
                if !xs.is_nonneg() {
                    continue;
                }
                let mut x = Vector::zeros(n);
                for (t, &j) in support.iter().enumerate() {
                    x[j] = xs[t].clone();
                }
                if m.mul_vec(&x).iter().all(|p| p <= bound) {
                    out.push(MixedStrategy(x));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All vertex optimal strategies of both players by support enumeration.
/// Requires `rows + cols ≤ cap`.
pub fn enumerate_optimal_supports(game: &ZeroSumGame, cap: usize) -> Result<OptimalVertices> {
    let size = game.rows() + game.cols();
    if size > cap {
        return Err(Error::CapExceeded { what: "support enumeration", size, cap });
    }
    let value = value_by_kernels(game)?;
    let col_vertices = simplex_face_vertices(&game.payoff, &value);
    let row_vertices = simplex_face_vertices(&game.payoff.transpose().neg(), &-&value);
    ensure!(!col_vertices.is_empty() && !row_vertices.is_empty(), "no optimal vertex found");
    Ok(OptimalVertices { value, row_vertices, col_vertices })
}
