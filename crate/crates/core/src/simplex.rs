//! Exact two-phase primal simplex on a dense tableau.
//!
//! A [`GeneralLP`] is canonicalized to `A_s x_s = b_s, x_s ≥ 0, b_s ≥ 0`:
//! every nonnegative variable keeps its column, every free variable `x_j`
//! additionally gets a column `−A_j` (so `x_j = x⁺ − x⁻`), every `≤` row
//! gets a slack `+1` and every `≥` row a surplus `−1`, and rows with a
//! negative right-hand side are negated. Phase one starts from an all
//! artificial basis. Entering and leaving variables follow Bland's rule, so
//! the method terminates and two runs on the same input pivot identically.
//!
//! Because the artificial columns start as the identity, their block of the
//! final tableau is the basis inverse; dual values are read from it.
//!
//! Dual conventions, with `y` indexed by the original rows:
//!
//! * maximize: `Aᵀy ≥ c` on nonnegative columns, `= c` on free columns,
//!   `y ≥ 0` on `≤` rows, `y ≤ 0` on `≥` rows, `y` free on `=` rows;
//! * minimize: `Aᵀy ≤ c` / `= c`, `y ≤ 0` on `≤` rows, `y ≥ 0` on `≥` rows.
//!
//! In both cases an optimal pair satisfies `cᵀx = bᵀy`.

use crate::error::{ensure, Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSense {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    NonNeg,
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralLP {
    pub sense: Sense,
    pub c: Vector,
    pub a: Matrix,
    pub row_senses: Vec<RowSense>,
    pub b: Vector,
    pub var_kinds: Vec<VarKind>,
}

impl GeneralLP {
    /// All rows `≤`, all variables nonnegative.
    pub fn new(sense: Sense, c: Vector, a: Matrix, b: Vector) -> Result<Self> {
        let (m, n) = a.shape();
        let lp = GeneralLP {
            sense,
            c,
            a,
            row_senses: vec![RowSense::Le; m],
            b,
            var_kinds: vec![VarKind::NonNeg; n],
        };
        lp.validate()?;
        Ok(lp)
    }

    pub fn with_row_senses(mut self, senses: Vec<RowSense>) -> Result<Self> {
        self.row_senses = senses;
        self.validate()?;
        Ok(self)
    }

    pub fn with_var_kinds(mut self, kinds: Vec<VarKind>) -> Result<Self> {
        self.var_kinds = kinds;
        self.validate()?;
        Ok(self)
    }

    /// A pure feasibility problem (zero objective).
    pub fn feasibility(a: Matrix, row_senses: Vec<RowSense>, b: Vector, var_kinds: Vec<VarKind>) -> Result<Self> {
        let n = a.cols();
        let lp = GeneralLP { sense: Sense::Maximize, c: Vector::zeros(n), a, row_senses, b, var_kinds };
        lp.validate()?;
        Ok(lp)
    }

    pub fn validate(&self) -> Result<()> {
        let (m, n) = self.a.shape();
        if self.b.dim() != m || self.row_senses.len() != m {
            return Err(Error::Dimension(format!(
                "{m} constraint rows but b has {} entries and {} row senses",
                self.b.dim(),
                self.row_senses.len()
            )));
        }
        if self.c.dim() != n || self.var_kinds.len() != n {
            return Err(Error::Dimension(format!(
                "{n} columns but c has {} entries and {} variable kinds",
                self.c.dim(),
                self.var_kinds.len()
            )));
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    pub fn cols(&self) -> usize {
        self.a.cols()
    }

    /// The canonical column set before row negation: structural columns,
    /// then one `−A_j` per free variable, then one slack or surplus column
    /// per inequality row. Basis indices in [`OptimalSolution`] refer to it.
    pub fn canonical_columns(&self) -> Matrix {
        Canonical::new(self).columns
    }

    pub fn is_primal_feasible(&self, x: &Vector) -> bool {
        if x.dim() != self.cols() {
            return false;
        }
        let ax = self.a.mul_vec(x);
        let rows_ok = (0..self.rows()).all(|i| match self.row_senses[i] {
            RowSense::Le => ax[i] <= self.b[i],
            RowSense::Eq => ax[i] == self.b[i],
            RowSense::Ge => ax[i] >= self.b[i],
        });
        let vars_ok = (0..self.cols())
            .all(|j| self.var_kinds[j] == VarKind::Free || x[j].is_nonneg());
        rows_ok && vars_ok
    }

    /// Dual feasibility per the module-level sign conventions.
    pub fn is_dual_feasible(&self, y: &Vector) -> bool {
        if y.dim() != self.rows() {
            return false;
        }
        let aty = self.a.vec_mul(y);
        let flip = self.sense == Sense::Minimize;
        let cols_ok = (0..self.cols()).all(|j| match self.var_kinds[j] {
            VarKind::Free => aty[j] == self.c[j],
            VarKind::NonNeg if flip => aty[j] <= self.c[j],
            VarKind::NonNeg => aty[j] >= self.c[j],
        });
        let rows_ok = (0..self.rows()).all(|i| match self.row_senses[i] {
            RowSense::Eq => true,
            RowSense::Le => y[i].is_nonneg() != flip || y[i].is_zero(),
            RowSense::Ge => y[i].is_nonneg() == flip || y[i].is_zero(),
        });
        cols_ok && rows_ok
    }

    /// `y` proves the constraint system empty: `yᵀA ≥ 0` on nonnegative
    /// columns and `= 0` on free ones, `y ≥ 0` on `≤` rows, `y ≤ 0` on `≥`
    /// rows, and `yᵀb < 0`.
    pub fn is_infeasibility_certificate(&self, y: &Vector) -> bool {
        if y.dim() != self.rows() {
            return false;
        }
        let aty = self.a.vec_mul(y);
        let cols_ok = (0..self.cols()).all(|j| match self.var_kinds[j] {
            VarKind::Free => aty[j].is_zero(),
            VarKind::NonNeg => aty[j].is_nonneg(),
        });
        let rows_ok = (0..self.rows()).all(|i| match self.row_senses[i] {
            RowSense::Eq => true,
            RowSense::Le => y[i].is_nonneg(),
            RowSense::Ge => !y[i].is_positive(),
        });
        cols_ok && rows_ok && y.dot(&self.b).is_negative()
    }

    /// `ray` is a recession direction of the feasible set along which the
    /// objective strictly improves.
    pub fn is_improving_ray(&self, ray: &Vector) -> bool {
        if ray.dim() != self.cols() {
            return false;
        }
        let ar = self.a.mul_vec(ray);
        let rows_ok = (0..self.rows()).all(|i| match self.row_senses[i] {
            RowSense::Le => !ar[i].is_positive(),
            RowSense::Eq => ar[i].is_zero(),
            RowSense::Ge => ar[i].is_nonneg(),
        });
        let vars_ok = (0..self.cols())
            .all(|j| self.var_kinds[j] == VarKind::Free || ray[j].is_nonneg());
        let gain = self.c.dot(ray);
        let improves = match self.sense {
            Sense::Maximize => gain.is_positive(),
            Sense::Minimize => gain.is_negative(),
        };
        rows_ok && vars_ok && improves
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalSolution {
    pub x: Vector,
    pub y: Vector,
    pub value: Rat,
    /// Basic columns of [`GeneralLP::canonical_columns`], in tableau row order.
    pub basis: Vec<usize>,
    /// Values of all canonical columns.
    pub canonical_point: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplexOutcome {
    Optimal(OptimalSolution),
    Infeasible { y: Vector },
    Unbounded { point: Vector, ray: Vector },
}

impl SimplexOutcome {
    pub fn optimal(self) -> Option<OptimalSolution> {
        match self {
            SimplexOutcome::Optimal(o) => Some(o),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, SimplexOutcome::Infeasible { .. })
    }

    pub fn is_feasible(&self) -> bool {
        !self.is_infeasible()
    }
}

/// Canonical form of a [`GeneralLP`] (see module docs).
struct Canonical {
    columns: Matrix,
    /// `±1` per row, chosen so that the right-hand side becomes nonnegative.
    row_sign: Vec<Rat>,
    /// Canonical column of `x⁻_j` for each free variable.
    minus_col: Vec<Option<usize>>,
}

impl Canonical {
    fn new(lp: &GeneralLP) -> Self {
        let (m, n) = lp.a.shape();
        let mut cols: Vec<Vector> = (0..n).map(|j| lp.a.col(j)).collect();
        let mut minus_col = vec![None; n];
        for (j, slot) in minus_col.iter_mut().enumerate() {
            if lp.var_kinds[j] == VarKind::Free {
                *slot = Some(cols.len());
                cols.push(lp.a.col(j).neg());
            }
        }
        for i in 0..m {
            let coeff = match lp.row_senses[i] {
                RowSense::Le => 1,
                RowSense::Ge => -1,
                RowSense::Eq => continue,
            };
            let mut s = Vector::zeros(m);
            s[i] = Rat::from(coeff);
            cols.push(s);
        }
        let row_sign =
            (0..m).map(|i| if lp.b[i].is_negative() { -Rat::one() } else { Rat::one() }).collect();
        Canonical { columns: Matrix::from_columns(&cols, m), row_sign, minus_col }
    }
}

struct Tableau {
    /// `m` rows of `n_struct + m` coefficients followed by the right-hand side.
    t: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    n_struct: usize,
}

enum PhaseEnd {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn width(&self) -> usize {
        self.n_struct + self.t.len()
    }

    fn rhs(&self, r: usize) -> &Rat {
        &self.t[r][self.width()]
    }

    fn reduced_cost(&self, cost: &[Rat], j: usize) -> Rat {
        let mut r = cost[j].clone();
        for (row, &bv) in self.t.iter().zip(&self.basis) {
            if !cost[bv].is_zero() && !row[j].is_zero() {
                r -= &cost[bv] * &row[j];
            }
        }
        r
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.t[r][j].recip();
        for v in self.t[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = j;
    }

    /// Maximizes `cost · x` over columns `0..allowed` using Bland's rule.
    fn run(&mut self, cost: &[Rat], allowed: usize) -> PhaseEnd {
        loop {
            let entering = (0..allowed)
                .filter(|j| !self.basis.contains(j))
                .find(|&j| self.reduced_cost(cost, j).is_positive());
            let Some(j) = entering else {
                return PhaseEnd::Optimal;
            };
            let mut best: Option<(usize, Rat)> = None;
            for r in 0..self.t.len() {
                let a = &self.t[r][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &best {
                    None => true,
                    Some((br, bratio)) => {
                        ratio < *bratio || (ratio == *bratio && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                None => return PhaseEnd::Unbounded(j),
                Some((r, _)) => self.pivot(r, j),
            }
        }
    }

    /// `c_Bᵀ B⁻¹`, read from the artificial block.
    fn duals(&self, cost: &[Rat]) -> Vector {
        let m = self.t.len();
        (0..m)
            .map(|i| {
                self.t
                    .iter()
                    .zip(&self.basis)
                    .filter(|(_, &bv)| !cost[bv].is_zero())
                    .map(|(row, &bv)| &cost[bv] * &row[self.n_struct + i])
                    .sum()
            })
            .collect()
    }

    fn point(&self) -> Vector {
        let mut x = Vector::zeros(self.n_struct);
        for (r, &bv) in self.basis.iter().enumerate() {
            if bv < self.n_struct {
                x[bv] = self.rhs(r).clone();
            }
        }
        x
    }
}

fn to_original(lp: &GeneralLP, canon: &Canonical, xs: &Vector) -> Vector {
    (0..lp.cols())
        .map(|j| match canon.minus_col[j] {
            Some(mj) => &xs[j] - &xs[mj],
            None => xs[j].clone(),
        })
        .collect()
}

/// Solves a general-form LP exactly. Every outcome is re-verified before it
/// is returned.
pub fn simplex_solve(lp: &GeneralLP) -> Result<SimplexOutcome> {
    lp.validate()?;
    let (m, _) = lp.a.shape();
    let canon = Canonical::new(lp);
    let ns = canon.columns.cols();

    let mut t = Vec::with_capacity(m);
    for i in 0..m {
        let s = &canon.row_sign[i];
        let mut row: Vec<Rat> = canon.columns.row(i).iter().map(|v| v * s).collect();
        row.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
        row.push(&lp.b[i] * s);
        t.push(row);
    }
    let mut tab = Tableau { t, basis: (ns..ns + m).collect(), n_struct: ns };

    // Phase one: maximize −Σ artificials.
    let mut cost1 = vec![Rat::zero(); ns + m];
    for c in cost1.iter_mut().skip(ns) {
        *c = -Rat::one();
    }
    if let PhaseEnd::Unbounded(_) = tab.run(&cost1, ns + m) {
        return Err(Error::Verification("phase one reported unbounded".into()));
    }
    let infeasibility: Rat =
        (0..m).filter(|&r| tab.basis[r] >= ns).map(|r| tab.rhs(r).clone()).sum();
    if infeasibility.is_positive() {
        let y1 = tab.duals(&cost1);
        let y: Vector = (0..m).map(|i| &y1[i] * &canon.row_sign[i]).collect();
        ensure!(lp.is_infeasibility_certificate(&y), "phase-one certificate does not verify");
        return Ok(SimplexOutcome::Infeasible { y });
    }

    // Pivot zero-level artificials out where a structural column allows it;
    // rows where none does are redundant and keep their artificial at zero.
    for r in 0..m {
        if tab.basis[r] >= ns {
            if let Some(j) = (0..ns).find(|&j| !tab.t[r][j].is_zero() && !tab.basis.contains(&j)) {
                tab.pivot(r, j);
            }
        }
    }

    // Phase two, always as a maximization.
    let sign = match lp.sense {
        Sense::Maximize => Rat::one(),
        Sense::Minimize => -Rat::one(),
    };
    let mut cost2 = vec![Rat::zero(); ns + m];
    for j in 0..lp.cols() {
        cost2[j] = &lp.c[j] * &sign;
        if let Some(mj) = canon.minus_col[j] {
            cost2[mj] = -&cost2[j];
        }
    }
    match tab.run(&cost2, ns) {
        PhaseEnd::Unbounded(j) => {
            let point = to_original(lp, &canon, &tab.point());
            let mut dir = Vector::zeros(ns);
            dir[j] = Rat::one();
            for (r, &bv) in tab.basis.iter().enumerate() {
                if bv < ns {
                    dir[bv] = -&tab.t[r][j];
                }
            }
            let ray = to_original(lp, &canon, &dir);
            ensure!(lp.is_primal_feasible(&point), "unbounded: base point infeasible");
            ensure!(lp.is_improving_ray(&ray), "unbounded: ray does not verify");
            Ok(SimplexOutcome::Unbounded { point, ray })
        }
        PhaseEnd::Optimal => {
            let xs = tab.point();
            let x = to_original(lp, &canon, &xs);
            let ys = tab.duals(&cost2);
            let y: Vector = (0..m).map(|i| &ys[i] * &canon.row_sign[i] * &sign).collect();
            let value = lp.c.dot(&x);
            ensure!(lp.is_primal_feasible(&x), "optimal x infeasible");
            ensure!(lp.is_dual_feasible(&y), "optimal y dual infeasible");
            ensure!(value == y.dot(&lp.b), "nonzero duality gap");
            let basis = tab.basis.iter().copied().filter(|&bv| bv < ns).collect();
            Ok(SimplexOutcome::Optimal(OptimalSolution { x, y, value, basis, canonical_point: xs }))
        }
    }
}

/// Basic feasible solution: the basis columns are linearly independent and
/// every nonbasic entry is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicSolution {
    pub basis: Vec<usize>,
    pub point: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinW {
    pub z: Vector,
    pub w: Rat,
    /// Basic solution of the slack form; structural columns are `(z, w)`.
    pub basic: BasicSolution,
    pub lp: GeneralLP,
}

/// The LP `minimize w s.t. Cz − 𝟙w ≤ d, dᵀz − w ≤ 0, z ≥ 0, w ≥ 0`.
pub fn min_w_lp(c: &Matrix, d: &Vector) -> Result<GeneralLP> {
    let k = c.rows();
    if !c.is_square() || d.dim() != k {
        return Err(Error::Dimension(format!(
            "C is {}x{} and d has length {}",
            c.rows(),
            c.cols(),
            d.dim()
        )));
    }
    let minus_one = Matrix::from_col_vector(&Vector::ones(k).neg());
    let top = c.hstack(&minus_one);
    let bottom = Matrix::from_row_vector(&d.concat(&Vector::from_i64(&[-1])));
    let a = top.vstack(&bottom);
    let rhs = d.concat(&Vector::zeros(1));
    GeneralLP::new(Sense::Minimize, Vector::unit(k + 1, k), a, rhs)
}

/// Basic optimal `(z*, w*)` of the auxiliary system above. `C` must be
/// skew-symmetric.
pub fn basic_min_w(c: &Matrix, d: &Vector) -> Result<MinW> {
    if !c.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    let lp = min_w_lp(c, d)?;
    let k = c.rows();
    let SimplexOutcome::Optimal(opt) = simplex_solve(&lp)? else {
        return Err(Error::Verification("auxiliary min-w LP has no optimum".into()));
    };
    let z = opt.x.slice(0, k);
    let w = opt.x[k].clone();
    ensure!(w.is_nonneg(), "negative w*");
    Ok(MinW {
        z,
        w,
        basic: BasicSolution { basis: opt.basis.clone(), point: opt.canonical_point.clone() },
        lp,
    })
}
