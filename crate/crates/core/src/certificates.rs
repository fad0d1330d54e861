//! Constructive theorems of the alternative.
//!
//! Every operation returns the side that holds together with its witness,
//! and every witness is re-verified exactly before it is returned. The
//! `is_*` predicates are the verifiers; they are public so that reports can
//! be re-checked without re-running the construction.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alternative::Alternative;
use crate::error::{ensure, Error, Result};
use crate::game::{solve_game, ZeroSumGame};
use crate::linalg::{nullspace_basis, solve_or_refute, Matrix, Vector};
use crate::rat::Rat;
use crate::reductions::{build_dantzig, solve_lp_via_bm, IneqLP};
use crate::simplex::{simplex_solve, GeneralLP, RowSense, Sense, SimplexOutcome, VarKind};

macro_rules! named_enum {
    ($(#[$meta:meta])* $name:ident { $($(#[$vmeta:meta])* $variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
        pub enum $name {
            $($(#[$vmeta])* #[serde(rename = $text)] $variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s {
                    $($text => Ok($name::$variant),)+
                    _ => Err(format!("unknown {}: {s}", stringify!($name))),
                }
            }
        }
    };
}

named_enum! {
    /// The three equivalent forms of the Lemma of Farkas.
    FarkasVariant {
        /// `Ax = b, x ≥ 0` versus `yᵀA ≥ 0ᵀ, yᵀb < 0`.
        Eq => "eq",
        /// `Ax ≤ b, x ≥ 0` versus `yᵀA ≥ 0ᵀ, y ≥ 0, yᵀb < 0`.
        IneqNonneg => "ineq_nonneg",
        /// `Ax ≤ b` versus `yᵀA = 0ᵀ, y ≥ 0, yᵀb < 0`.
        IneqFree => "ineq_free",
    }
}

named_enum! {
    GordanMethod {
        ViaVille => "via_ville",
        ViaStiemke => "via_stiemke",
    }
}

named_enum! {
    TuckerVariant {
        Eq => "eq",
        Ineq => "ineq",
        Skew => "skew",
    }
}

named_enum! {
    TuckerMethod {
        Summation => "summation",
        Elimination => "elimination",
    }
}

fn check_dims(a: &Matrix, b: &Vector) -> Result<()> {
    if a.rows() != b.dim() {
        return Err(Error::Dimension(format!("A has {} rows but b has length {}", a.rows(), b.dim())));
    }
    Ok(())
}

/// Left side of the Lemma of Farkas.
pub fn is_farkas_left(a: &Matrix, b: &Vector, variant: FarkasVariant, x: &Vector) -> bool {
    if x.dim() != a.cols() || a.rows() != b.dim() {
        return false;
    }
    let ax = a.mul_vec(x);
    match variant {
        FarkasVariant::Eq => x.is_nonneg() && &ax == b,
        FarkasVariant::IneqNonneg => x.is_nonneg() && ax.le(b),
        FarkasVariant::IneqFree => ax.le(b),
    }
}

/// Right side of the Lemma of Farkas.
pub fn is_farkas_right(a: &Matrix, b: &Vector, variant: FarkasVariant, y: &Vector) -> bool {
    if y.dim() != a.rows() || a.rows() != b.dim() || !y.dot(b).is_negative() {
        return false;
    }
    let ya = a.vec_mul(y);
    match variant {
        FarkasVariant::Eq => ya.is_nonneg(),
        FarkasVariant::IneqNonneg => y.is_nonneg() && ya.is_nonneg(),
        FarkasVariant::IneqFree => y.is_nonneg() && ya.is_zero(),
    }
}

/// `Ax ≤ b, x ≥ 0` decided by `maximize −t s.t. Ax − 𝟙t ≤ b, x, t ≥ 0`:
/// the optimum has `t = 0` exactly when the system is feasible, and the
/// dual optimum `y` is otherwise a certificate with `yᵀb = −t`.
fn farkas_nonneg(a: &Matrix, b: &Vector) -> Result<Alternative<Vector, Vector>> {
    let (m, n) = a.shape();
    if m == 0 {
        return Ok(Alternative::Left(Vector::zeros(n)));
    }
    let lhs = a.hstack(&Matrix::from_col_vector(&Vector::ones(m).neg()));
    let lp = GeneralLP::new(Sense::Maximize, Vector::unit(n + 1, n).neg(), lhs, b.clone())?;
    let SimplexOutcome::Optimal(opt) = simplex_solve(&lp)? else {
        return Err(Error::Verification("Farkas LP has no optimum".into()));
    };
    if opt.x[n].is_zero() {
        Ok(Alternative::Left(opt.x.slice(0, n)))
    } else {
        Ok(Alternative::Right(opt.y))
    }
}

pub fn farkas(a: &Matrix, b: &Vector, variant: FarkasVariant) -> Result<Alternative<Vector, Vector>> {
    check_dims(a, b)?;
    let n = a.cols();
    let out = match variant {
        FarkasVariant::IneqNonneg => farkas_nonneg(a, b)?,
        // Ax = b as Ax ≤ b, −Ax ≤ −b; y = y⁺ − y⁻.
        FarkasVariant::Eq => {
            let m = a.rows();
            match farkas_nonneg(&a.vstack(&a.neg()), &b.concat(&b.neg()))? {
                Alternative::Left(x) => Alternative::Left(x),
                Alternative::Right(y) => Alternative::Right(y.slice(0, m).sub(&y.slice(m, 2 * m))),
            }
        }
        // x = x⁺ − x⁻ with x⁺, x⁻ ≥ 0.
        FarkasVariant::IneqFree => match farkas_nonneg(&a.hstack(&a.neg()), b)? {
            Alternative::Left(x) => Alternative::Left(x.slice(0, n).sub(&x.slice(n, 2 * n))),
            Alternative::Right(y) => Alternative::Right(y),
        },
    };
    match &out {
        Alternative::Left(x) => ensure!(is_farkas_left(a, b, variant, x), "Farkas {variant} left side fails"),
        Alternative::Right(y) => ensure!(is_farkas_right(a, b, variant, y), "Farkas {variant} right side fails"),
    }
    Ok(out)
}

/// The same decision made through the skew-symmetric form of Tucker's
/// Lemma on Dantzig's game for `c = 0`: a `z = (y, x, t)` with `z ≥ 0`,
/// `Bz ≤ 0` and `t − bᵀy > 0` gives `x/t` if `t > 0` and `y` otherwise.
pub fn farkas_via_skew_tucker(a: &Matrix, b: &Vector) -> Result<Alternative<Vector, Vector>> {
    check_dims(a, b)?;
    let (m, n) = a.shape();
    let lp = IneqLP::new(a.clone(), b.clone(), Vector::zeros(n))?;
    let game = build_dantzig(&lp);
    let z = tucker_lemma_skew(game.payoff(), m + n)?;
    let t = &z[m + n];
    let out = if t.is_positive() {
        Alternative::Left(z.slice(m, m + n).scale(&t.recip()))
    } else {
        Alternative::Right(z.slice(0, m))
    };
    match &out {
        Alternative::Left(x) => ensure!(is_farkas_left(a, b, FarkasVariant::IneqNonneg, x), "left side fails"),
        Alternative::Right(y) => ensure!(is_farkas_right(a, b, FarkasVariant::IneqNonneg, y), "right side fails"),
    }
    Ok(out)
}

/// `Ax = 0, x ≥ 0, x ≠ 0`.
pub fn is_gordan_left(a: &Matrix, x: &Vector) -> bool {
    x.dim() == a.cols() && x.is_nonneg() && !x.is_zero() && a.mul_vec(x).is_zero()
}

/// `yᵀA > 0ᵀ`.
pub fn is_gordan_right(a: &Matrix, y: &Vector) -> bool {
    y.dim() == a.rows() && a.vec_mul(y).is_positive()
}

pub fn gordan(a: &Matrix, method: GordanMethod) -> Result<Alternative<Vector, Vector>> {
    let m = a.rows();
    let out = match method {
        GordanMethod::ViaVille => match ville(&a.vstack(&a.neg()))? {
            Alternative::Left(x) => Alternative::Left(x),
            Alternative::Right(y) => Alternative::Right(y.slice(0, m).sub(&y.slice(m, 2 * m))),
        },
        GordanMethod::ViaStiemke => {
            let basis = nullspace_basis(a);
            let row_space_positive = |c: Vector| -> Result<Vector> {
                // c is orthogonal to the null space, so c = Aᵀy is solvable
                match solve_or_refute(&a.transpose(), &c)? {
                    Alternative::Left(y) => Ok(y),
                    Alternative::Right(_) => Err(Error::Verification("c is not in the row space".into())),
                }
            };
            if basis.is_empty() {
                Alternative::Right(row_space_positive(Vector::ones(a.cols()))?)
            } else {
                let bt = Matrix::from_columns(&basis, a.cols()).transpose();
                match stiemke(&bt)? {
                    // uᵀBᵀ ≥ 0ᵀ, ≠ 0ᵀ: Bu is a nonnegative nonzero null vector
                    Alternative::Left(u) => Alternative::Left(bt.vec_mul(&u)),
                    // Bᵀc = 0 with c > 0: c lies in the row space of A
                    Alternative::Right(c) => Alternative::Right(row_space_positive(c)?),
                }
            }
        }
    };
    match &out {
        Alternative::Left(x) => ensure!(is_gordan_left(a, x), "Gordan left side fails"),
        Alternative::Right(y) => ensure!(is_gordan_right(a, y), "Gordan right side fails"),
    }
    Ok(out)
}

/// `Ax ≤ 0, x ≥ 0, x ≠ 0`.
pub fn is_ville_left(a: &Matrix, x: &Vector) -> bool {
    x.dim() == a.cols() && x.is_nonneg() && !x.is_zero() && a.mul_vec(x).is_nonpos()
}

/// `yᵀA > 0ᵀ, y ≥ 0`.
pub fn is_ville_right(a: &Matrix, y: &Vector) -> bool {
    y.dim() == a.rows() && y.is_nonneg() && a.vec_mul(y).is_positive()
}

/// Decided by the value of the game `A`: a min-max strategy if the value is
/// at most zero, a max-min strategy if it is positive.
pub fn ville(a: &Matrix) -> Result<Alternative<Vector, Vector>> {
    let sol = solve_game(&ZeroSumGame::new(a.clone())?)?;
    let out = if sol.value.is_positive() {
        Alternative::Right(sol.row_strategy.into_vector())
    } else {
        Alternative::Left(sol.col_strategy.into_vector())
    };
    match &out {
        Alternative::Left(x) => ensure!(is_ville_left(a, x), "Ville left side fails"),
        Alternative::Right(y) => ensure!(is_ville_right(a, y), "Ville right side fails"),
    }
    Ok(out)
}

/// `yᵀA ≥ 0ᵀ, yᵀA ≠ 0ᵀ`.
pub fn is_stiemke_left(a: &Matrix, y: &Vector) -> bool {
    if y.dim() != a.rows() {
        return false;
    }
    let ya = a.vec_mul(y);
    ya.is_nonneg() && !ya.is_zero()
}

/// `Ax = 0, x > 0`.
pub fn is_stiemke_right(a: &Matrix, x: &Vector) -> bool {
    x.dim() == a.cols() && x.is_positive() && a.mul_vec(x).is_zero()
}

/// `x > 0` is decided as `x ≥ 𝟙`, and `yᵀA ≠ 0ᵀ` as `yᵀA𝟙 ≥ 1`; both
/// systems are homogeneous, so scaling makes this exact.
pub fn stiemke(a: &Matrix) -> Result<Alternative<Vector, Vector>> {
    let (m, n) = a.shape();
    let primal = GeneralLP::feasibility(
        a.vstack(&Matrix::identity(n)),
        [vec![RowSense::Eq; m], vec![RowSense::Ge; n]].concat(),
        Vector::zeros(m).concat(&Vector::ones(n)),
        vec![VarKind::NonNeg; n],
    )?;
    let out = match simplex_solve(&primal)? {
        SimplexOutcome::Optimal(opt) => Alternative::Right(opt.x),
        _ => {
            let at = a.transpose();
            let sum_row = Matrix::from_row_vector(&at.vec_mul(&Vector::ones(n)));
            let dual = GeneralLP::feasibility(
                at.vstack(&sum_row),
                vec![RowSense::Ge; n + 1],
                Vector::zeros(n).concat(&Vector::ones(1)),
                vec![VarKind::Free; m],
            )?;
            let SimplexOutcome::Optimal(opt) = simplex_solve(&dual)? else {
                return Err(Error::Verification("neither Stiemke system is feasible".into()));
            };
            Alternative::Left(opt.x)
        }
    };
    match &out {
        Alternative::Left(y) => ensure!(is_stiemke_left(a, y), "Stiemke left side fails"),
        Alternative::Right(x) => ensure!(is_stiemke_right(a, x), "Stiemke right side fails"),
    }
    Ok(out)
}

/// Output of one of the forms of Tucker's Lemma for a column `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TuckerLemma {
    /// `yᵀA ≥ 0ᵀ, x ≥ 0, Ax = 0, x_j + (yᵀA)_j > 0`.
    Eq { y: Vector, x: Vector },
    /// `y ≥ 0, yᵀA ≥ 0ᵀ, x ≥ 0, Ax ≤ 0, x_j + (yᵀA)_j > 0`.
    Ineq { y: Vector, x: Vector },
    /// `z ≥ 0, Bz ≤ 0, z_j − (Bz)_j > 0`.
    Skew { z: Vector },
}

pub fn is_tucker_lemma(a: &Matrix, j: usize, out: &TuckerLemma) -> bool {
    if j >= a.cols() {
        return false;
    }
    match out {
        TuckerLemma::Eq { y, x } | TuckerLemma::Ineq { y, x } => {
            if y.dim() != a.rows() || x.dim() != a.cols() {
                return false;
            }
            let ya = a.vec_mul(y);
            let ax = a.mul_vec(x);
            let common = ya.is_nonneg() && x.is_nonneg() && (&x[j] + &ya[j]).is_positive();
            match out {
                TuckerLemma::Eq { .. } => common && ax.is_zero(),
                _ => common && y.is_nonneg() && ax.is_nonpos(),
            }
        }
        TuckerLemma::Skew { z } => {
            if !a.is_skew_symmetric() || z.dim() != a.cols() {
                return false;
            }
            let bz = a.mul_vec(z);
            z.is_nonneg() && bz.is_nonpos() && (&z[j] - &bz[j]).is_positive()
        }
    }
}

fn check_column(a: &Matrix, j: usize) -> Result<()> {
    if j >= a.cols() {
        return Err(Error::IndexOutOfRange { index: j, len: a.cols() });
    }
    Ok(())
}

/// Farkas with equalities on the other columns against `−A_j`: either
/// `Σ_{i≠j} A_i z_i = −A_j` with `z ≥ 0`, giving `x = (z, 1)` and `y = 0`,
/// or a `y` with `yᵀA_i ≥ 0` and `yᵀA_j > 0`, giving `x = 0`.
pub fn tucker_lemma_eq(a: &Matrix, j: usize) -> Result<(Vector, Vector)> {
    check_column(a, j)?;
    let (m, n) = a.shape();
    let others: Vec<usize> = (0..n).filter(|&i| i != j).collect();
    let rhs = a.col(j).neg();
    let (y, x) = match farkas(&a.select_cols(&others), &rhs, FarkasVariant::Eq)? {
        Alternative::Left(z) => {
            let mut x = Vector::zeros(n);
            for (t, &i) in others.iter().enumerate() {
                x[i] = z[t].clone();
            }
            x[j] = Rat::one();
            (Vector::zeros(m), x)
        }
        Alternative::Right(y) => (y, Vector::zeros(n)),
    };
    let out = TuckerLemma::Eq { y, x };
    ensure!(is_tucker_lemma(a, j, &out), "Tucker's Lemma fails for column {j}");
    let TuckerLemma::Eq { y, x } = out else { unreachable!() };
    Ok((y, x))
}

/// The equality form applied to `[I A]` at column `m + j`.
pub fn tucker_lemma_ineq(a: &Matrix, j: usize) -> Result<(Vector, Vector)> {
    check_column(a, j)?;
    let m = a.rows();
    let (y, xs) = tucker_lemma_eq(&Matrix::identity(m).hstack(a), m + j)?;
    let out = TuckerLemma::Ineq { y, x: xs.slice(m, xs.dim()) };
    ensure!(is_tucker_lemma(a, j, &out), "inequality form of Tucker's Lemma fails for column {j}");
    let TuckerLemma::Ineq { y, x } = out else { unreachable!() };
    Ok((y, x))
}

/// The inequality form on a skew-symmetric `B` with `z = x + y`.
pub fn tucker_lemma_skew(b: &Matrix, j: usize) -> Result<Vector> {
    if !b.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    let (y, x) = tucker_lemma_ineq(b, j)?;
    let z = x.add(&y);
    ensure!(is_tucker_lemma(b, j, &TuckerLemma::Skew { z: z.clone() }), "skew form fails for column {j}");
    Ok(z)
}

pub fn tucker_lemma(a: &Matrix, j: usize, variant: TuckerVariant) -> Result<TuckerLemma> {
    Ok(match variant {
        TuckerVariant::Eq => {
            let (y, x) = tucker_lemma_eq(a, j)?;
            TuckerLemma::Eq { y, x }
        }
        TuckerVariant::Ineq => {
            let (y, x) = tucker_lemma_ineq(a, j)?;
            TuckerLemma::Ineq { y, x }
        }
        TuckerVariant::Skew => TuckerLemma::Skew { z: tucker_lemma_skew(a, j)? },
    })
}

/// `yᵀA ≥ 0ᵀ, x ≥ 0, Ax = 0, x + Aᵀy > 0`, with `S` the support of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuckerPartition {
    /// Columns that are positive in some nonnegative null vector, ascending.
    pub support: Vec<usize>,
    pub x: Vector,
    pub y: Vector,
}

impl TuckerPartition {
    pub fn verify(&self, a: &Matrix) -> bool {
        if self.x.dim() != a.cols() || self.y.dim() != a.rows() {
            return false;
        }
        let ya = a.vec_mul(&self.y);
        ya.is_nonneg()
            && self.x.is_nonneg()
            && a.mul_vec(&self.x).is_zero()
            && self.x.add(&ya).is_positive()
            && self.x.support() == self.support
            && (0..a.cols()).all(|j| self.support.contains(&j) == ya[j].is_zero())
    }
}

pub fn tucker_theorem(a: &Matrix, method: TuckerMethod) -> Result<TuckerPartition> {
    let (m, n) = a.shape();
    let (y, x) = match method {
        TuckerMethod::Summation => {
            let mut y = Vector::zeros(m);
            let mut x = Vector::zeros(n);
            for j in 0..n {
                let (yj, xj) = tucker_lemma_eq(a, j)?;
                y = y.add(&yj);
                x = x.add(&xj);
            }
            (y, x)
        }
        TuckerMethod::Elimination => tucker_by_elimination(a)?,
    };
    let partition = TuckerPartition { support: x.support(), x, y };
    ensure!(partition.verify(a), "Tucker partition fails");
    Ok(partition)
}

/// Sum of witnesses `x ≥ 0, Ax = 0, x_j ≥ 1` over all columns `j` where
/// one exists; its support is the largest support of a nonnegative null
/// vector.
pub fn maximal_support_vector(a: &Matrix) -> Result<Vector> {
    let (m, n) = a.shape();
    let mut total = Vector::zeros(n);
    for j in 0..n {
        if !total[j].is_zero() {
            continue;
        }
        let sys = GeneralLP::feasibility(
            a.vstack(&Matrix::from_row_vector(&Vector::unit(n, j))),
            [vec![RowSense::Eq; m], vec![RowSense::Ge]].concat(),
            Vector::zeros(m).concat(&Vector::ones(1)),
            vec![VarKind::NonNeg; n],
        )?;
        if let SimplexOutcome::Optimal(opt) = simplex_solve(&sys)? {
            total = total.add(&opt.x);
        }
    }
    Ok(total)
}

/// Eliminates `x_S` with an invertible row transformation `C` and applies
/// Gordan's Theorem to the remaining block `D`.
fn tucker_by_elimination(a: &Matrix) -> Result<(Vector, Vector)> {
    let (m, n) = a.shape();
    let x = maximal_support_vector(a)?;
    let s = x.support();
    if s.len() == n {
        return Ok((Vector::zeros(m), x));
    }
    let j_cols: Vec<usize> = (0..n).filter(|c| !s.contains(c)).collect();
    let a_s = a.select_cols(&s);
    // rows of F: a maximal independent set of rows of A_S; every other row
    // of A_S is z⁽ⁱ⁾F for a unique z⁽ⁱ⁾
    let f_rows = a_s.independent_rows();
    let k = f_rows.len();
    ensure!(k < m, "A_S has full row rank although S is not everything");
    let d_rows: Vec<usize> = (0..m).filter(|r| !f_rows.contains(r)).collect();
    let f = a_s.select_rows(&f_rows);
    let mut z = Matrix::zeros(m - k, k);
    for (t, &i) in d_rows.iter().enumerate() {
        let Alternative::Left(zi) = solve_or_refute(&f.transpose(), &a_s.row_vector(i))? else {
            return Err(Error::Verification(format!("row {i} of A_S is not spanned by F")));
        };
        for c in 0..k {
            z[(t, c)] = zi[c].clone();
        }
    }
    // D = A[P, J] − Z·A[R, J], the top block of C·A_J
    let d = a.submatrix(&d_rows, &j_cols).sub(&z.mul(&a.submatrix(&f_rows, &j_cols)));
    let w = match gordan(&d, GordanMethod::ViaVille)? {
        Alternative::Right(w) => w,
        Alternative::Left(_) => {
            return Err(Error::Verification("D has a nonnegative null vector, so S was not maximal".into()));
        }
    };
    // yᵀ = (wᵀ, 0ᵀ)C = (wᵀ, −wᵀZ) in the permuted row order
    let tail = z.vec_mul(&w).neg();
    let mut y = Vector::zeros(m);
    for (t, &i) in d_rows.iter().enumerate() {
        y[i] = w[t].clone();
    }
    for (t, &i) in f_rows.iter().enumerate() {
        y[i] = tail[t].clone();
    }
    Ok((y, x))
}

/// `z ≥ 0, Bz ≤ 0, z − Bz > 0` for skew-symmetric `B`, from Tucker's
/// Theorem on `[I B]`.
pub fn skew_tucker(b: &Matrix, method: TuckerMethod) -> Result<Vector> {
    if !b.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    let k = b.rows();
    let part = tucker_theorem(&Matrix::identity(k).hstack(b), method)?;
    let z = part.x.slice(k, 2 * k).add(&part.y);
    ensure!(is_skew_tucker(b, &z), "skew Tucker vector fails");
    Ok(z)
}

pub fn is_skew_tucker(b: &Matrix, z: &Vector) -> bool {
    if z.dim() != b.cols() {
        return false;
    }
    let bz = b.mul_vec(z);
    z.is_nonneg() && bz.is_nonpos() && z.sub(&bz).is_positive()
}

/// Optimal `x, y` with `y + (b − Ax) > 0` and `x + (Aᵀy − c) > 0`.
pub fn strict_complementary_pair(lp: &IneqLP, method: TuckerMethod) -> Result<(Vector, Vector)> {
    if !solve_lp_via_bm(lp, None)?.verdict.is_optimal() {
        return Err(Error::InfeasibleSide);
    }
    let (m, n) = (lp.m(), lp.n());
    let z = skew_tucker(build_dantzig(lp).payoff(), method)?;
    let t = z[m + n].clone();
    ensure!(t.is_positive(), "skew Tucker vector of B has t = 0 although both LPs are feasible");
    let inv = t.recip();
    let x = z.slice(m, m + n).scale(&inv);
    let y = z.slice(0, m).scale(&inv);
    let report = verify_optimal_pair(lp, &x, &y, true);
    ensure!(report.pass, "strict complementary pair fails: {}", report.first_failure.unwrap_or_default());
    Ok((x, y))
}

/// One checked identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub identity: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub pass: bool,
    pub checks: Vec<Check>,
    pub first_failure: Option<String>,
    /// `yᵀb − cᵀx`, when the dimensions allow computing it.
    pub gap: Option<Rat>,
}

/// Feasibility, weak duality, zero gap and complementary slackness per
/// component, and with `strict` also strict complementarity.
pub fn verify_optimal_pair(lp: &IneqLP, x: &Vector, y: &Vector, strict: bool) -> PairReport {
    let mut checks = Vec::new();
    let mut push = |identity: String, pass: bool| checks.push(Check { identity, pass });
    let dims = x.dim() == lp.n() && y.dim() == lp.m();
    push(format!("dim(x) = {} and dim(y) = {}", lp.n(), lp.m()), dims);
    let mut gap = None;
    if dims {
        let slack = lp.b.sub(&lp.a.mul_vec(x));
        let reduced = lp.a.vec_mul(y).sub(&lp.c);
        push("x >= 0".into(), x.is_nonneg());
        push("Ax <= b".into(), slack.is_nonneg());
        push("y >= 0".into(), y.is_nonneg());
        push("y^T A >= c^T".into(), reduced.is_nonneg());
        let (cx, yb) = (lp.c.dot(x), lp.b.dot(y));
        push(format!("c^T x = {cx} <= y^T b = {yb}"), cx <= yb);
        let g = &yb - &cx;
        push(format!("gap y^T b - c^T x = {g} is 0"), g.is_zero());
        gap = Some(g);
        for i in 0..lp.m() {
            push(format!("y_{i} (b - Ax)_{i} = 0"), (&y[i] * &slack[i]).is_zero());
        }
        for j in 0..lp.n() {
            push(format!("(y^T A - c^T)_{j} x_{j} = 0"), (&reduced[j] * &x[j]).is_zero());
        }
        if strict {
            for i in 0..lp.m() {
                push(format!("y_{i} + (b - Ax)_{i} > 0"), (&y[i] + &slack[i]).is_positive());
            }
            for j in 0..lp.n() {
                push(format!("x_{j} + (y^T A - c^T)_{j} > 0"), (&x[j] + &reduced[j]).is_positive());
            }
        }
    }
    let first_failure = checks.iter().find(|c| !c.pass).map(|c| c.identity.clone());
    PairReport { pass: first_failure.is_none(), checks, first_failure, gap }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::reductions::solve_direct;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    fn v(entries: &[i64]) -> Vector {
        Vector::from_i64(entries)
    }

    fn i5() -> Matrix {
        m(&[&[1, -1, 0], &[0, 0, 1]])
    }

    #[test]
    fn farkas_examples() {
        assert_eq!(farkas(&m(&[&[1]]), &v(&[-1]), FarkasVariant::IneqNonneg).unwrap(), Alternative::Right(v(&[1])));
        assert_eq!(farkas(&m(&[&[1, -1]]), &v(&[0]), FarkasVariant::Eq).unwrap(), Alternative::Left(v(&[0, 0])));
        let out = farkas(&m(&[&[1], &[-1], &[1]]), &v(&[0, -1, 5]), FarkasVariant::IneqFree).unwrap();
        let y = out.right().unwrap();
        assert!(y[2].is_zero() && y[0] == y[1] && y[0].is_positive());
        assert!(matches!(farkas(&m(&[&[1]]), &v(&[1, 2]), FarkasVariant::Eq), Err(Error::Dimension(_))));
    }

    #[test]
    fn farkas_degenerate_shapes() {
        let empty_cols = Matrix::zeros(2, 0);
        assert!(farkas(&empty_cols, &v(&[0, 0]), FarkasVariant::Eq).unwrap().is_left());
        assert!(farkas(&empty_cols, &v(&[0, 1]), FarkasVariant::Eq).unwrap().is_right());
        assert!(farkas(&empty_cols, &v(&[0, 1]), FarkasVariant::IneqFree).unwrap().is_left());
        assert!(farkas(&empty_cols, &v(&[0, -1]), FarkasVariant::IneqNonneg).unwrap().is_right());
    }

    #[test]
    fn gordan_examples() {
        for method in GordanMethod::ALL {
            let x = gordan(&m(&[&[1, -1]]), *method).unwrap().left().unwrap();
            assert_eq!(x[0], x[1]);
            assert!(gordan(&m(&[&[1, 1]]), *method).unwrap().is_right());
            let x = gordan(&i5(), *method).unwrap().left().unwrap();
            assert_eq!(x.support(), vec![0, 1]);
        }
        assert_eq!(gordan(&m(&[&[1, 1]]), GordanMethod::ViaStiemke).unwrap(), Alternative::Right(v(&[1])));
        // trivial null space
        assert!(gordan(&m(&[&[1, 0], &[0, 1]]), GordanMethod::ViaStiemke).unwrap().is_right());
    }

    #[test]
    fn ville_examples() {
        let y = ville(&m(&[&[1, 2, 0], &[1, 0, 2]])).unwrap().right().unwrap();
        assert_eq!(y, Vector::new(vec![rat!(1, 2), rat!(1, 2)]));
        assert_eq!(ville(&m(&[&[-1]])).unwrap(), Alternative::Left(v(&[1])));
        assert_eq!(ville(&m(&[&[0]])).unwrap(), Alternative::Left(v(&[1])));
    }

    #[test]
    fn stiemke_examples() {
        let x = stiemke(&m(&[&[1, -1]])).unwrap().right().unwrap();
        assert!(x.is_positive() && x[0] == x[1]);
        let y = stiemke(&m(&[&[1, 0]])).unwrap().left().unwrap();
        assert!(y[0].is_positive());
        assert!(stiemke(&m(&[&[0]])).unwrap().right().unwrap().is_positive());
    }

    #[test]
    fn tucker_lemma_examples() {
        assert_eq!(tucker_lemma_eq(&m(&[&[1]]), 0).unwrap(), (v(&[1]), v(&[0])));
        assert_eq!(tucker_lemma_eq(&m(&[&[1, -1]]), 1).unwrap(), (v(&[0]), v(&[1, 1])));
        assert!(matches!(tucker_lemma_eq(&m(&[&[1]]), 1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(tucker_lemma(&m(&[&[1]]), 0, TuckerVariant::Skew), Err(Error::NotSkewSymmetric)));

        let lp = IneqLP::from_i64(&[&[1]], &[-1], &[0]);
        let b = build_dantzig(&lp);
        let k = b.rows();
        let out = tucker_lemma(b.payoff(), k - 1, TuckerVariant::Skew).unwrap();
        assert!(is_tucker_lemma(b.payoff(), k - 1, &out));
        // infeasible primal: the certificate side must be used
        assert!(farkas_via_skew_tucker(&lp.a, &lp.b).unwrap().is_right());
    }

    #[test]
    fn tucker_theorem_examples() {
        for method in TuckerMethod::ALL {
            let p = tucker_theorem(&i5(), *method).unwrap();
            assert_eq!(p.support, vec![0, 1]);
            let ya = i5().vec_mul(&p.y);
            assert!(ya[0].is_zero() && ya[1].is_zero() && ya[2].is_positive());

            let p = tucker_theorem(&m(&[&[0]]), *method).unwrap();
            assert_eq!(p.support, vec![0]);
            assert_eq!(p.y, v(&[0]));

            let p = tucker_theorem(&m(&[&[1]]), *method).unwrap();
            assert!(p.support.is_empty());
            assert_eq!(p.x, v(&[0]));
        }
        let p = tucker_theorem(&i5(), TuckerMethod::Summation).unwrap();
        assert_eq!(p.y, v(&[0, 1]));
    }

    #[test]
    fn skew_tucker_examples() {
        for method in TuckerMethod::ALL {
            assert!(skew_tucker(&m(&[&[0]]), *method).unwrap().is_positive());
            let b = m(&[&[0, 1], &[-1, 0]]);
            assert!(is_skew_tucker(&b, &skew_tucker(&b, *method).unwrap()));
            let i1 = IneqLP::from_i64(&[&[2]], &[1], &[3]);
            let z = skew_tucker(build_dantzig(&i1).payoff(), *method).unwrap();
            assert!(z[2].is_positive());
        }
        assert!(matches!(skew_tucker(&m(&[&[1]]), TuckerMethod::Summation), Err(Error::NotSkewSymmetric)));
    }

    #[test]
    fn strict_complementarity_examples() {
        let i2 = IneqLP::from_i64(&[&[0, 1]], &[1], &[0, 1]);
        let (x, y) = strict_complementary_pair(&i2, TuckerMethod::Elimination).unwrap();
        assert!(x.is_positive() && x[1] == 1);
        assert_eq!(y, v(&[1]));
        assert!(verify_optimal_pair(&i2, &v(&[1, 1]), &v(&[1]), true).pass);

        let i1 = IneqLP::from_i64(&[&[2]], &[1], &[3]);
        let (x, y) = strict_complementary_pair(&i1, TuckerMethod::Summation).unwrap();
        assert_eq!((x, y), (Vector::new(vec![rat!(1, 2)]), Vector::new(vec![rat!(3, 2)])));

        let i3 = IneqLP::from_i64(&[&[1]], &[-1], &[1]);
        assert_eq!(strict_complementary_pair(&i3, TuckerMethod::Summation), Err(Error::InfeasibleSide));
    }

    #[test]
    fn pair_verification_examples() {
        let i1 = IneqLP::from_i64(&[&[2]], &[1], &[3]);
        let ok = verify_optimal_pair(&i1, &Vector::new(vec![rat!(1, 2)]), &Vector::new(vec![rat!(3, 2)]), false);
        assert!(ok.pass);
        assert_eq!(ok.gap, Some(rat!(0)));

        let bad = verify_optimal_pair(&i1, &v(&[0]), &Vector::new(vec![rat!(3, 2)]), false);
        assert!(!bad.pass);
        assert_eq!(bad.gap, Some(rat!(3, 2)));
        assert!(bad.first_failure.unwrap().starts_with("gap"));
        assert!(bad.checks.iter().any(|c| c.identity == "y_0 (b - Ax)_0 = 0" && !c.pass));

        assert!(!verify_optimal_pair(&i1, &v(&[0, 0]), &v(&[1]), false).pass);
    }

    fn random_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |e| Matrix::from_fn(r, c, |i, j| Rat::new(e[i * c + j], 1 + (i + j) as i64 % 2)))
        })
    }

    fn random_rhs(rows: usize) -> impl Strategy<Value = Vector> {
        proptest::collection::vec(-3i64..=3, rows).prop_map(|e| Vector::from_i64(&e))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn gordan_methods_agree(a in random_matrix()) {
            let via_ville = gordan(&a, GordanMethod::ViaVille).unwrap();
            let via_stiemke = gordan(&a, GordanMethod::ViaStiemke).unwrap();
            prop_assert_eq!(via_ville.side(), via_stiemke.side());
            // Gordan's right side holds iff the maximal support is empty
            let p = tucker_theorem(&a, TuckerMethod::Elimination).unwrap();
            prop_assert_eq!(via_ville.is_right(), p.support.is_empty());
            prop_assert_eq!(stiemke(&a).unwrap().is_right(), p.support.len() == a.cols());
        }

        #[test]
        fn tucker_methods_agree(a in random_matrix()) {
            let s = tucker_theorem(&a, TuckerMethod::Summation).unwrap();
            let e = tucker_theorem(&a, TuckerMethod::Elimination).unwrap();
            prop_assert_eq!(s.support, e.support);
        }

        #[test]
        fn farkas_routes_agree((a, b) in random_matrix().prop_flat_map(|a| { let r = a.rows(); (Just(a), random_rhs(r)) })) {
            let direct = farkas(&a, &b, FarkasVariant::IneqNonneg).unwrap();
            let via_tucker = farkas_via_skew_tucker(&a, &b).unwrap();
            prop_assert_eq!(direct.side(), via_tucker.side());
            // the equality form on [A I] is the inequality form on A
            let slack = farkas(&a.hstack(&Matrix::identity(a.rows())), &b, FarkasVariant::Eq).unwrap();
            prop_assert_eq!(slack.side(), direct.side());
            // the free form on A is the nonnegative form on [A −A]
            let free = farkas(&a, &b, FarkasVariant::IneqFree).unwrap();
            prop_assert_eq!(free.side(), farkas(&a.hstack(&a.neg()), &b, FarkasVariant::IneqNonneg).unwrap().side());
        }

        #[test]
        fn strict_pairs_on_feasible_lps(
            (a, b, c) in random_matrix().prop_flat_map(|a| {
                let (r, n) = a.shape();
                (Just(a), random_rhs(r), random_rhs(n))
            })
        ) {
            let lp = IneqLP::new(a, b, c).unwrap();
            let d = solve_direct(&lp).unwrap();
            match strict_complementary_pair(&lp, TuckerMethod::Elimination) {
                Ok((x, y)) => {
                    prop_assert!(d.optimum.is_some());
                    prop_assert!(verify_optimal_pair(&lp, &x, &y, true).pass);
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::InfeasibleSide);
                    prop_assert!(d.optimum.is_none());
                }
            }
        }
    }
}
