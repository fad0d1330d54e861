//! Commands on problem files and their self-checking reports.
//!
//! A [`Report`] echoes the command, its options and the problem, states a
//! verdict and carries the certificate with every rational written exactly.
//! Its `checks` are produced by [`recheck`], which reads the certificate
//! back from the report itself; running [`recheck`] on an emitted report
//! therefore reproduces every check.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::alternative::Alternative;
use crate::certificates::{
    farkas, gordan, stiemke, strict_complementary_pair, tucker_lemma, tucker_theorem, verify_optimal_pair, ville,
    Check, FarkasVariant, GordanMethod, TuckerLemma, TuckerMethod, TuckerVariant,
};
use crate::error::Error;
use crate::game::{enumerate_optimal_supports, solve_game, DEFAULT_ENUM_DIM_CAP};
use crate::infeasibility::{check_minfeas_equalities, fourier_motzkin, shrink_minimal_infeasible, DEFAULT_FM_ROW_CAP};
use crate::linalg::{Matrix, Vector};
use crate::problem::{parse_matrix, parse_number, parse_vector, problem_from_value, Problem, ProblemError};
use crate::rat::Rat;
use crate::reductions::{
    bound_m, build_bm, build_brooks_reny, build_dantzig, build_dm, cd_from_lp, min_slack, solve_lp_via_bm,
    tight_bound, IneqLP, DEFAULT_BR_DIM_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("input error: {0}")]
    Input(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => 1,
            RunError::CapExceeded(_) => 2,
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => RunError::CapExceeded(e.to_string()),
            other => RunError::Input(other.to_string()),
        }
    }
}

impl From<ProblemError> for RunError {
    fn from(e: ProblemError) -> Self {
        RunError::Input(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReduceTarget {
    Dantzig,
    Bm,
    Dm,
    BrooksReny,
}

/// Caps and the optional bound `M`, shared by all commands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Options {
    #[serde(rename = "M")]
    pub m: Option<Rat>,
    pub fm_row_cap: usize,
    pub br_dim_cap: usize,
    pub enum_dim_cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            m: None,
            fm_row_cap: DEFAULT_FM_ROW_CAP,
            br_dim_cap: DEFAULT_BR_DIM_CAP,
            enum_dim_cap: DEFAULT_ENUM_DIM_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case", rename_all_fields = "camelCase")]
pub enum Command {
    Solve,
    Game { vertices: bool },
    Reduce { target: ReduceTarget },
    BoundM,
    Farkas { variant: FarkasVariant },
    Gordan { method: GordanMethod },
    Ville,
    Stiemke,
    /// Tucker's Theorem, or Tucker's Lemma when a column is given.
    Tucker { method: TuckerMethod, column: Option<usize>, variant: TuckerVariant },
    StrictComp { method: TuckerMethod },
    VerifyPair { x: Vector, y: Vector, strict: bool },
    MinInfeasible,
    Fm,
    MinSlackW,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub command: Command,
    pub options: Options,
    pub problem: Value,
    pub verdict: String,
    pub certificate: Value,
    pub checks: Vec<Check>,
    /// All checks pass.
    pub pass: bool,
}

impl Report {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("rationals serialize")
}

fn matrix_json(m: &Matrix) -> Value {
    to_json(&m.to_rows())
}

fn need_lp(problem: &Problem) -> Result<&IneqLP, RunError> {
    match problem {
        Problem::Lp(lp) => Ok(lp),
        other => Err(RunError::Input(format!("this command needs an lp problem, got {}", other.kind()))),
    }
}

/// The payoff of a game or the matrix of a system.
fn need_matrix(problem: &Problem) -> Result<&Matrix, RunError> {
    match problem {
        Problem::Game(g) => Ok(g.payoff()),
        Problem::System(s) => Ok(&s.a),
        Problem::Lp(_) => Err(RunError::Input("this command needs a game or system problem, got lp".into())),
    }
}

fn need_system(problem: &Problem) -> Result<(&Matrix, &Vector), RunError> {
    match problem {
        Problem::System(s) => match &s.b {
            Some(b) => Ok((&s.a, b)),
            None => Err(RunError::Input("this command needs a system with a right-hand side b".into())),
        },
        other => Err(RunError::Input(format!("this command needs a system problem, got {}", other.kind()))),
    }
}

fn side_name<L, R>(a: &Alternative<L, R>) -> String {
    a.side().as_str().to_string()
}

/// Runs `command` and assembles its report.
pub fn run(command: &Command, options: &Options, problem: &Problem) -> Result<Report, RunError> {
    let (verdict, certificate) = compute(command, options, problem)?;
    let mut report = Report {
        command: command.clone(),
        options: options.clone(),
        problem: problem.to_json(),
        verdict,
        certificate,
        checks: Vec::new(),
        pass: false,
    };
    report.checks = recheck(&report)?;
    report.pass = report.checks.iter().all(|c| c.pass);
    Ok(report)
}

fn compute(command: &Command, options: &Options, problem: &Problem) -> Result<(String, Value), RunError> {
    Ok(match command {
        Command::Solve => {
            let lp = need_lp(problem)?;
            let s = solve_lp_via_bm(lp, options.m.as_ref())?;
            let mut cert = json!({
                "M": s.m_bound,
                "gameValue": s.game_value,
                "rowStrategy": s.solution.row_strategy.probs(),
                "colStrategy": s.solution.col_strategy.probs(),
            });
            let verdict = match &s.verdict {
                crate::reductions::LpVerdict::OptimalPair { x, y, value } => {
                    cert["x"] = to_json(x);
                    cert["y"] = to_json(y);
                    cert["value"] = to_json(value);
                    "OptimalPair"
                }
                crate::reductions::LpVerdict::NoOptimum(w) => {
                    cert["x"] = to_json(&w.x);
                    cert["y"] = to_json(&w.y);
                    cert["primalUnboundedIfFeasible"] = json!(w.primal_unbounded_if_feasible);
                    cert["dualUnboundedIfFeasible"] = json!(w.dual_unbounded_if_feasible);
                    "NoOptimum"
                }
            };
            (verdict.into(), cert)
        }
        Command::Game { vertices } => {
            let game = game_of(problem)?;
            let sol = solve_game(&game)?;
            let mut cert = json!({
                "value": sol.value,
                "rowStrategy": sol.row_strategy.probs(),
                "colStrategy": sol.col_strategy.probs(),
            });
            if *vertices {
                let v = enumerate_optimal_supports(&game, options.enum_dim_cap)?;
                let probs = |list: &[crate::game::MixedStrategy]| -> Vec<Vector> {
                    list.iter().map(|s| s.probs().clone()).collect()
                };
                cert["rowVertices"] = to_json(&probs(&v.row_vertices));
                cert["colVertices"] = to_json(&probs(&v.col_vertices));
            }
            ("Solved".into(), cert)
        }
        Command::Reduce { target } => {
            let (payoff, extra) = build_reduction(*target, options, problem)?;
            let mut cert = json!({ "payoff": matrix_json(&payoff) });
            for (k, v) in extra {
                cert[k] = to_json(&v);
            }
            ("Game".into(), cert)
        }
        Command::BoundM => {
            let lp = need_lp(problem)?;
            let (ell, alpha, beta) = bound_parameters(lp);
            ("Bound".into(), json!({"M": bound_m(lp), "ell": ell, "alpha": alpha, "beta": beta}))
        }
        Command::Farkas { variant } => {
            let (a, b) = need_system(problem)?;
            alternative_report(farkas(a, b, *variant)?, "x", "y")
        }
        Command::Gordan { method } => alternative_report(gordan(need_matrix(problem)?, *method)?, "x", "y"),
        Command::Ville => alternative_report(ville(need_matrix(problem)?)?, "x", "y"),
        Command::Stiemke => alternative_report(stiemke(need_matrix(problem)?)?, "y", "x"),
        Command::Tucker { method, column, variant } => {
            let a = need_matrix(problem)?;
            match column {
                None => {
                    let p = tucker_theorem(a, *method)?;
                    ("Partition".into(), json!({"S": p.support, "x": p.x, "y": p.y}))
                }
                Some(j) => match tucker_lemma(a, *j, *variant)? {
                    TuckerLemma::Eq { y, x } | TuckerLemma::Ineq { y, x } => {
                        ("Lemma".into(), json!({"x": x, "y": y}))
                    }
                    TuckerLemma::Skew { z } => ("Lemma".into(), json!({"z": z})),
                },
            }
        }
        Command::StrictComp { method } => {
            let (x, y) = strict_complementary_pair(need_lp(problem)?, *method)?;
            ("StrictPair".into(), json!({"x": x, "y": y}))
        }
        Command::VerifyPair { x, y, strict } => {
            let r = verify_optimal_pair(need_lp(problem)?, x, y, *strict);
            let verdict = if r.pass { "Pass" } else { "Fail" };
            (verdict.into(), json!({"gap": r.gap, "firstFailure": r.first_failure}))
        }
        Command::MinInfeasible => {
            let (a, b) = need_system(problem)?;
            let iis = shrink_minimal_infeasible(a, b)?;
            let witnesses: Vec<Value> = iis.witnesses.iter().map(|(i, x)| json!({"row": i, "x": x})).collect();
            ("MinimallyInfeasible".into(), json!({"rows": iis.rows, "y": iis.y, "witnesses": witnesses}))
        }
        Command::Fm => {
            let (a, b) = need_system(problem)?;
            alternative_report(fourier_motzkin(a, b, options.fm_row_cap)?, "x", "y")
        }
        Command::MinSlackW => {
            let s = min_slack(need_lp(problem)?)?;
            ("MinSlack".into(), json!({"w": s.w, "xBar": s.x_bar, "yBar": s.y_bar}))
        }
    })
}

fn alternative_report(out: Alternative<Vector, Vector>, left: &str, right: &str) -> (String, Value) {
    let side = side_name(&out);
    let cert = match out {
        Alternative::Left(v) => json!({ left: v }),
        Alternative::Right(v) => json!({ right: v }),
    };
    (side, cert)
}

fn game_of(problem: &Problem) -> Result<crate::game::ZeroSumGame, RunError> {
    Ok(crate::game::ZeroSumGame::new(need_matrix(problem)?.clone())?)
}

fn bound_parameters(lp: &IneqLP) -> (usize, Rat, Rat) {
    let ell = lp.m() + lp.n() + 1;
    let alpha = lp.entries().map(|e| Rat::from(e.numer().clone()).abs()).max().unwrap_or_else(Rat::zero);
    let beta = lp.entries().map(|e| Rat::from(e.denom().clone())).max().unwrap_or_else(Rat::one);
    (ell, alpha, beta)
}

/// `M = ℓ!·ℓ·α^ℓ·β^(ℓ²+ℓ) + 1` from its parameters.
fn bound_formula(ell: usize, alpha: &Rat, beta: &Rat) -> Rat {
    let factorial: Rat = (1..=ell).map(Rat::from).product();
    let e = u32::try_from(ell).expect("dimension fits in u32");
    factorial * Rat::from(ell) * alpha.pow(e) * beta.pow(e * e + e) + Rat::one()
}

/// Named parameters a reduction used, such as `M` or `alpha`.
type Parameters = Vec<(&'static str, Rat)>;

/// The payoff matrix of a reduction and the parameters it used.
fn build_reduction(
    target: ReduceTarget,
    options: &Options,
    problem: &Problem,
) -> Result<(Matrix, Parameters), RunError> {
    Ok(match target {
        ReduceTarget::Dantzig => (build_dantzig(need_lp(problem)?).into_payoff(), vec![]),
        ReduceTarget::Bm => {
            let lp = need_lp(problem)?;
            let m = options.m.clone().unwrap_or_else(|| bound_m(lp));
            (build_bm(lp, &m)?.into_payoff(), vec![("M", m)])
        }
        ReduceTarget::Dm => {
            let (c, d) = match problem {
                Problem::Lp(lp) => cd_from_lp(lp),
                Problem::System(s) => match &s.b {
                    Some(b) => (s.a.clone(), b.clone()),
                    None => return Err(RunError::Input("reduce --target dm needs C and d".into())),
                },
                Problem::Game(_) => return Err(RunError::Input("reduce --target dm needs an lp or system".into())),
            };
            let required = tight_bound(&c, &d)?;
            let m = options.m.clone().unwrap_or_else(|| required.clone());
            (build_dm(&c, &d, &m)?.into_payoff(), vec![("M", m), ("requiredM", required)])
        }
        ReduceTarget::BrooksReny => {
            let br = build_brooks_reny(need_lp(problem)?, options.br_dim_cap)?;
            (br.game.into_payoff(), vec![("alpha", br.alpha)])
        }
    })
}

/// Accumulates named identity checks.
#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, identity: impl Into<String>, pass: bool) {
        self.0.push(Check { identity: identity.into(), pass });
    }

    fn probability(&mut self, name: &str, p: &Vector, dim: usize) {
        self.add(format!("{name} has {dim} entries"), p.dim() == dim);
        self.add(format!("{name} >= 0"), p.is_nonneg());
        self.add(format!("sum of {name} = 1"), p.sum() == 1);
    }

    /// `pᵀA ≥ v𝟙ᵀ` and `Aq ≤ v𝟙`.
    fn optimal_strategies(&mut self, a: &Matrix, v: &Rat, p: &Vector, q: &Vector) {
        self.probability("row strategy", p, a.rows());
        self.probability("column strategy", q, a.cols());
        if p.dim() == a.rows() && q.dim() == a.cols() {
            self.add(format!("row strategy guarantees at least {v}"), a.vec_mul(p).iter().all(|e| e >= v));
            self.add(format!("column strategy concedes at most {v}"), a.mul_vec(q).iter().all(|e| e <= v));
        }
    }
}

struct Cert<'a>(&'a Value);

impl Cert<'_> {
    fn get(&self, key: &str) -> Result<&Value, RunError> {
        self.0
            .get(key)
            .ok_or_else(|| RunError::Input(format!("certificate has no field {key}")))
    }

    fn has(&self, key: &str) -> bool {
        self.0.get(key).is_some()
    }

    fn rat(&self, key: &str) -> Result<Rat, RunError> {
        Ok(parse_number(self.get(key)?, key)?)
    }

    fn vector(&self, key: &str) -> Result<Vector, RunError> {
        Ok(parse_vector(self.get(key)?, key)?)
    }

    fn matrix(&self, key: &str) -> Result<Matrix, RunError> {
        Ok(parse_matrix(self.get(key)?, key)?)
    }

    fn vectors(&self, key: &str) -> Result<Vec<Vector>, RunError> {
        let items = self
            .get(key)?
            .as_array()
            .ok_or_else(|| RunError::Input(format!("{key} is not an array")))?;
        items
            .iter()
            .enumerate()
            .map(|(i, v)| Ok(parse_vector(v, &format!("{key}[{i}]"))?))
            .collect()
    }

    fn flag(&self, key: &str) -> Result<bool, RunError> {
        self.get(key)?
            .as_bool()
            .ok_or_else(|| RunError::Input(format!("{key} is not a boolean")))
    }

    fn indices(&self, key: &str) -> Result<Vec<usize>, RunError> {
        serde_json::from_value(self.get(key)?.clone())
            .map_err(|e| RunError::Input(format!("{key} is not a list of indices: {e}")))
    }
}

fn expect_verdict(verdict: &str, allowed: &[&str]) -> Result<(), RunError> {
    if allowed.contains(&verdict) {
        Ok(())
    } else {
        Err(RunError::Input(format!("verdict {verdict} is not one of {}", allowed.join(", "))))
    }
}

/// Re-derives every check of a report from the problem and certificate it
/// contains.
pub fn recheck(report: &Report) -> Result<Vec<Check>, RunError> {
    let problem = problem_from_value(&report.problem)?;
    let cert = Cert(&report.certificate);
    let verdict = report.verdict.as_str();
    let mut ck = Checks::default();
    match &report.command {
        Command::Solve => {
            let lp = need_lp(&problem)?;
            let (m, n) = (lp.m(), lp.n());
            let m_bound = cert.rat("M")?;
            let v = cert.rat("gameValue")?;
            let p = cert.vector("rowStrategy")?;
            let q = cert.vector("colStrategy")?;
            let x = cert.vector("x")?;
            let y = cert.vector("y")?;
            ck.add("M > 0", m_bound.is_positive());
            if let Some(given) = &report.options.m {
                ck.add("M is the requested bound", given == &m_bound);
            } else {
                ck.add("M is the closed-form bound", m_bound == bound_m(lp));
            }
            if m_bound.is_positive() {
                let game = build_bm(lp, &m_bound)?;
                ck.optimal_strategies(game.payoff(), &v, &p, &q);
            }
            ck.add("x has n entries", x.dim() == n);
            ck.add("y has m entries", y.dim() == m);
            if x.dim() != n || y.dim() != m || p.dim() != m + n + 2 || q.dim() != m + n + 1 {
                return Ok(ck.0);
            }
            match verdict {
                "OptimalPair" => {
                    let value = cert.rat("value")?;
                    let t = &q[m + n];
                    ck.add("game value = 0", v.is_zero());
                    ck.add("t > 0 in the column strategy (y', x', t)", t.is_positive());
                    if t.is_positive() {
                        ck.add("x = x'/t", x == q.slice(m, m + n).scale(&t.recip()));
                        ck.add("y = y'/t", y == q.slice(0, m).scale(&t.recip()));
                    }
                    ck.add("x >= 0", x.is_nonneg());
                    ck.add("Ax <= b", lp.a.mul_vec(&x).le(&lp.b));
                    ck.add("y >= 0", y.is_nonneg());
                    ck.add("y^T A >= c^T", lp.c.le(&lp.a.vec_mul(&y)));
                    ck.add(format!("c^T x = {value}"), lp.c.dot(&x) == value);
                    ck.add(format!("y^T b = {value}"), lp.b.dot(&y) == value);
                }
                "NoOptimum" => {
                    ck.add("0 < game value < 1", v.is_positive() && v < Rat::one());
                    ck.add("r = 0 in the row strategy (y, x, r, s)", p[m + n].is_zero());
                    ck.add("s = game value", p[m + n + 1] == v);
                    ck.add("(y, x) is read from the row strategy", x == p.slice(m, m + n) && y == p.slice(0, m));
                    ck.add("x >= 0", x.is_nonneg());
                    ck.add("Ax <= 0", lp.a.mul_vec(&x).is_nonpos());
                    ck.add("y >= 0", y.is_nonneg());
                    ck.add("A^T y >= 0", lp.a.vec_mul(&y).is_nonneg());
                    ck.add("b^T y - c^T x < 0", (lp.b.dot(&y) - lp.c.dot(&x)).is_negative());
                    ck.add(
                        "primalUnboundedIfFeasible = (c^T x > 0)",
                        cert.flag("primalUnboundedIfFeasible")? == lp.c.dot(&x).is_positive(),
                    );
                    ck.add(
                        "dualUnboundedIfFeasible = (b^T y < 0)",
                        cert.flag("dualUnboundedIfFeasible")? == lp.b.dot(&y).is_negative(),
                    );
                }
                other => return Err(RunError::Input(format!("unknown solve verdict {other}"))),
            }
        }
        Command::Game { .. } => {
            expect_verdict(verdict, &["Solved"])?;
            let a = need_matrix(&problem)?;
            let v = cert.rat("value")?;
            ck.optimal_strategies(a, &v, &cert.vector("rowStrategy")?, &cert.vector("colStrategy")?);
            if cert.has("colVertices") {
                let rows = cert.vectors("rowVertices")?;
                let cols = cert.vectors("colVertices")?;
                for (i, p) in rows.iter().enumerate() {
                    ck.probability(&format!("row vertex {i}"), p, a.rows());
                    ck.add(
                        format!("row vertex {i} guarantees at least {v}"),
                        p.dim() == a.rows() && a.vec_mul(p).iter().all(|e| e >= &v),
                    );
                }
                for (j, q) in cols.iter().enumerate() {
                    ck.probability(&format!("column vertex {j}"), q, a.cols());
                    ck.add(
                        format!("column vertex {j} concedes at most {v}"),
                        q.dim() == a.cols() && a.mul_vec(q).iter().all(|e| e <= &v),
                    );
                }
            }
        }
        Command::Reduce { target } => {
            expect_verdict(verdict, &["Game"])?;
            let payoff = cert.matrix("payoff")?;
            let mut options = report.options.clone();
            if cert.has("M") {
                options.m = Some(cert.rat("M")?);
            }
            let (rebuilt, extra) = build_reduction(*target, &options, &problem)?;
            ck.add("payoff matrix matches the construction", payoff == rebuilt);
            for (key, value) in extra {
                ck.add(format!("{key} = {value}"), cert.rat(key)? == value);
            }
            match target {
                ReduceTarget::Dantzig => ck.add("payoff is skew-symmetric", payoff.is_skew_symmetric()),
                ReduceTarget::Dm => ck.add("M >= 1^T z* + 1", cert.rat("M")? >= cert.rat("requiredM")?),
                ReduceTarget::Bm | ReduceTarget::BrooksReny => {
                    ck.add("payoff has m + n + 1 columns", payoff.cols() == need_lp(&problem)?.m() + need_lp(&problem)?.n() + 1)
                }
            }
        }
        Command::BoundM => {
            expect_verdict(verdict, &["Bound"])?;
            let lp = need_lp(&problem)?;
            let (ell, alpha, beta) = bound_parameters(lp);
            let m_bound = cert.rat("M")?;
            ck.add(format!("alpha = {alpha}"), cert.rat("alpha")? == alpha);
            ck.add(format!("beta = {beta}"), cert.rat("beta")? == beta);
            ck.add(format!("ell = m + n + 1 = {ell}"), cert.rat("ell")? == Rat::from(ell));
            ck.add("M = ell! * ell * alpha^ell * beta^(ell^2 + ell) + 1", m_bound == bound_formula(ell, &alpha, &beta));
            ck.add("M is an integer", m_bound.is_integer());
        }
        Command::Farkas { variant } => {
            let (a, b) = need_system(&problem)?;
            expect_verdict(verdict, &["Left", "Right"])?;
            if verdict == "Left" {
                let x = cert.vector("x")?;
                ck.add("x has one entry per column", x.dim() == a.cols());
                if x.dim() == a.cols() {
                    let ax = a.mul_vec(&x);
                    match variant {
                        FarkasVariant::Eq => {
                            ck.add("x >= 0", x.is_nonneg());
                            ck.add("Ax = b", &ax == b);
                        }
                        FarkasVariant::IneqNonneg => {
                            ck.add("x >= 0", x.is_nonneg());
                            ck.add("Ax <= b", ax.le(b));
                        }
                        FarkasVariant::IneqFree => ck.add("Ax <= b", ax.le(b)),
                    }
                }
            } else {
                let y = cert.vector("y")?;
                ck.add("y has one entry per row", y.dim() == a.rows());
                if y.dim() == a.rows() {
                    let ya = a.vec_mul(&y);
                    match variant {
                        FarkasVariant::Eq => ck.add("y^T A >= 0", ya.is_nonneg()),
                        FarkasVariant::IneqNonneg => {
                            ck.add("y >= 0", y.is_nonneg());
                            ck.add("y^T A >= 0", ya.is_nonneg());
                        }
                        FarkasVariant::IneqFree => {
                            ck.add("y >= 0", y.is_nonneg());
                            ck.add("y^T A = 0", ya.is_zero());
                        }
                    }
                    ck.add("y^T b < 0", y.dot(b).is_negative());
                }
            }
        }
        Command::Gordan { .. } | Command::Ville => {
            let a = need_matrix(&problem)?;
            expect_verdict(verdict, &["Left", "Right"])?;
            let is_ville = matches!(report.command, Command::Ville);
            if verdict == "Left" {
                let x = cert.vector("x")?;
                ck.add("x has one entry per column", x.dim() == a.cols());
                if x.dim() == a.cols() {
                    ck.add("x >= 0", x.is_nonneg());
                    ck.add("x != 0", !x.is_zero());
                    if is_ville {
                        ck.add("Ax <= 0", a.mul_vec(&x).is_nonpos());
                    } else {
                        ck.add("Ax = 0", a.mul_vec(&x).is_zero());
                    }
                }
            } else {
                let y = cert.vector("y")?;
                ck.add("y has one entry per row", y.dim() == a.rows());
                if y.dim() == a.rows() {
                    if is_ville {
                        ck.add("y >= 0", y.is_nonneg());
                    }
                    ck.add("y^T A > 0", a.vec_mul(&y).is_positive());
                }
            }
        }
        Command::Stiemke => {
            let a = need_matrix(&problem)?;
            expect_verdict(verdict, &["Left", "Right"])?;
            if verdict == "Left" {
                let y = cert.vector("y")?;
                ck.add("y has one entry per row", y.dim() == a.rows());
                if y.dim() == a.rows() {
                    let ya = a.vec_mul(&y);
                    ck.add("y^T A >= 0", ya.is_nonneg());
                    ck.add("y^T A != 0", !ya.is_zero());
                }
            } else {
                let x = cert.vector("x")?;
                ck.add("x has one entry per column", x.dim() == a.cols());
                if x.dim() == a.cols() {
                    ck.add("x > 0", x.is_positive());
                    ck.add("Ax = 0", a.mul_vec(&x).is_zero());
                }
            }
        }
        Command::Tucker { column, variant, .. } => {
            let a = need_matrix(&problem)?;
            match column {
                None => {
                    expect_verdict(verdict, &["Partition"])?;
                    let s = cert.indices("S")?;
                    let x = cert.vector("x")?;
                    let y = cert.vector("y")?;
                    tucker_partition_checks(&mut ck, a, &s, &x, &y);
                }
                Some(j) => {
                    expect_verdict(verdict, &["Lemma"])?;
                    let j = *j;
                    ck.add("column index is in range", j < a.cols());
                    if j >= a.cols() {
                        return Ok(ck.0);
                    }
                    if *variant == TuckerVariant::Skew {
                        let z = cert.vector("z")?;
                        ck.add("matrix is skew-symmetric", a.is_skew_symmetric());
                        ck.add("z has one entry per column", z.dim() == a.cols());
                        if z.dim() == a.cols() {
                            let bz = a.mul_vec(&z);
                            ck.add("z >= 0", z.is_nonneg());
                            ck.add("Bz <= 0", bz.is_nonpos());
                            ck.add(format!("z_{j} - (Bz)_{j} > 0"), (&z[j] - &bz[j]).is_positive());
                        }
                    } else {
                        let x = cert.vector("x")?;
                        let y = cert.vector("y")?;
                        ck.add("dimensions match", x.dim() == a.cols() && y.dim() == a.rows());
                        if x.dim() == a.cols() && y.dim() == a.rows() {
                            let ya = a.vec_mul(&y);
                            let ax = a.mul_vec(&x);
                            if *variant == TuckerVariant::Ineq {
                                ck.add("y >= 0", y.is_nonneg());
                                ck.add("Ax <= 0", ax.is_nonpos());
                            } else {
                                ck.add("Ax = 0", ax.is_zero());
                            }
                            ck.add("y^T A >= 0", ya.is_nonneg());
                            ck.add("x >= 0", x.is_nonneg());
                            ck.add(format!("x_{j} + (y^T A)_{j} > 0"), (&x[j] + &ya[j]).is_positive());
                        }
                    }
                }
            }
        }
        Command::StrictComp { .. } => {
            expect_verdict(verdict, &["StrictPair"])?;
            let r = verify_optimal_pair(need_lp(&problem)?, &cert.vector("x")?, &cert.vector("y")?, true);
            ck.0.extend(r.checks);
        }
        Command::VerifyPair { x, y, strict } => {
            expect_verdict(verdict, &["Pass", "Fail"])?;
            let r = verify_optimal_pair(need_lp(&problem)?, x, y, *strict);
            let stored_first: Option<String> = serde_json::from_value(cert.get("firstFailure")?.clone())
                .map_err(|e| RunError::Input(format!("firstFailure: {e}")))?;
            ck.add("verdict matches the checks", (verdict == "Pass") == r.pass);
            ck.add("first failure matches the checks", stored_first == r.first_failure);
            ck.0.extend(r.checks);
        }
        Command::MinInfeasible => {
            expect_verdict(verdict, &["MinimallyInfeasible"])?;
            let (a, b) = need_system(&problem)?;
            iis_checks(&mut ck, a, b, &cert)?;
        }
        Command::Fm => {
            let (a, b) = need_system(&problem)?;
            expect_verdict(verdict, &["Left", "Right"])?;
            if verdict == "Left" {
                let x = cert.vector("x")?;
                ck.add("x has one entry per column", x.dim() == a.cols());
                ck.add("Ax <= b", x.dim() == a.cols() && a.mul_vec(&x).le(b));
            } else {
                let y = cert.vector("y")?;
                ck.add("y has one entry per row", y.dim() == a.rows());
                if y.dim() == a.rows() {
                    ck.add("y >= 0", y.is_nonneg());
                    ck.add("y^T A = 0", a.vec_mul(&y).is_zero());
                    ck.add("y^T b < 0", y.dot(b).is_negative());
                }
            }
        }
        Command::MinSlackW => {
            expect_verdict(verdict, &["MinSlack"])?;
            let lp = need_lp(&problem)?;
            let s = crate::reductions::MinSlack {
                w: cert.rat("w")?,
                x_bar: cert.vector("xBar")?,
                y_bar: cert.vector("yBar")?,
            };
            ck.add("w >= 0", s.w.is_nonneg());
            ck.add("A xBar <= b + 1w, -A^T yBar <= -c + 1w, xBar, yBar >= 0", s.is_feasible(lp));
            ck.add("w is the minimum", s.w == min_slack(lp)?.w);
        }
    }
    Ok(ck.0)
}

fn tucker_partition_checks(ck: &mut Checks, a: &Matrix, s: &[usize], x: &Vector, y: &Vector) {
    ck.add("dimensions match", x.dim() == a.cols() && y.dim() == a.rows());
    if x.dim() != a.cols() || y.dim() != a.rows() {
        return;
    }
    let ya = a.vec_mul(y);
    ck.add("y^T A >= 0", ya.is_nonneg());
    ck.add("x >= 0", x.is_nonneg());
    ck.add("Ax = 0", a.mul_vec(x).is_zero());
    ck.add("x + A^T y > 0", x.add(&ya).is_positive());
    ck.add("supp(x) = S", x.support() == s);
    ck.add("(y^T A)_j = 0 exactly for j in S", (0..a.cols()).all(|j| s.contains(&j) == ya[j].is_zero()));
}

fn iis_checks(ck: &mut Checks, a: &Matrix, b: &Vector, cert: &Cert<'_>) -> Result<(), RunError> {
    let rows = cert.indices("rows")?;
    let y = cert.vector("y")?;
    let witnesses = cert
        .get("witnesses")?
        .as_array()
        .ok_or_else(|| RunError::Input("witnesses is not an array".into()))?;
    ck.add("row indices are in range", rows.iter().all(|&i| i < a.rows()));
    ck.add("y has one entry per row", y.dim() == a.rows());
    if y.dim() != a.rows() || rows.iter().any(|&i| i >= a.rows()) {
        return Ok(());
    }
    ck.add("y >= 0", y.is_nonneg());
    ck.add("y^T A = 0", a.vec_mul(&y).is_zero());
    ck.add("y^T b < 0", y.dot(b).is_negative());
    ck.add("y > 0 exactly on the subsystem", (0..a.rows()).all(|i| y[i].is_positive() == rows.contains(&i)));
    ck.add("one reversal witness per row", witnesses.len() == rows.len());
    for (t, w) in witnesses.iter().enumerate() {
        let w = Cert(w);
        let i: usize = serde_json::from_value(w.get("row")?.clone())
            .map_err(|e| RunError::Input(format!("witnesses[{t}].row: {e}")))?;
        let x = w.vector("x")?;
        if !rows.contains(&i) || x.dim() != a.cols() {
            ck.add(format!("witness {t} refers to a subsystem row"), false);
            continue;
        }
        let slack = |k: usize| Vector::new(a.row(k).to_vec()).dot(&x) - &b[k];
        let z = slack(i);
        ck.add(format!("a_{i} x^({i}) > b_{i}"), z.is_positive());
        ck.add(format!("a_k x^({i}) = b_k for the other rows"), rows.iter().filter(|&&k| k != i).all(|&k| slack(k).is_zero()));
        ck.add(format!("y_{i} z_{i} = 1"), &y[i] * &z == Rat::one());
        let rest: Vec<usize> = rows.iter().copied().filter(|&k| k != i).collect();
        let feasible = farkas(&a.select_rows(&rest), &b.select(&rest), FarkasVariant::IneqFree)?.is_left();
        ck.add(format!("the subsystem without row {i} is feasible"), feasible);
    }
    let r = check_minfeas_equalities(&a.select_rows(&rows), &b.select(&rows))?;
    ck.add("the equalities of the subsystem are infeasible", r.equalities_infeasible);
    ck.add("dropping any equality makes them feasible", r.removal_feasible.iter().all(|f| *f));
    Ok(())
}
