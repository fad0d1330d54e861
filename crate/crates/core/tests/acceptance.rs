//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
//!
//! Random instances use a fixed ChaCha seed, dimensions `m, n ≤ 4` and
//! entries from the halves in `[−3, 3]`.

use std::process::ExitCode;
use std::time::Instant;

use duality_core::alternative::Alternative;
use duality_core::certificates::{
    farkas, gordan, is_farkas_left, is_farkas_right, is_gordan_left, is_gordan_right, is_stiemke_left,
    is_stiemke_right, is_ville_left, is_ville_right, stiemke, strict_complementary_pair, tucker_theorem,
    verify_optimal_pair, ville, FarkasVariant, GordanMethod, TuckerMethod,
};
use duality_core::game::{enumerate_optimal_supports, solve_game, MixedStrategy, ZeroSumGame};
use duality_core::infeasibility::{check_minfeas_equalities, fourier_motzkin, shrink_minimal_infeasible};
use duality_core::reductions::{
    bm_witness, bound_m, build_dantzig, interpret_dantzig, min_slack_w, solve_direct,
    solve_lp_via_bm, solve_lp_via_brooks_reny, w_from_value, DantzigReading, IneqLP, LpVerdict,
};
use duality_core::simplex::{simplex_solve, GeneralLP, RowSense, VarKind};
use duality_core::{Matrix, Rat, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_d0a1;
const INSTANCES: usize = 200;
/// Largest `m + n + 2 + m + n + 1` for which every optimal vertex of `B_M`
/// is enumerated.
const VERTEX_ENUM_CAP: usize = 13;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn half(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(rng.gen_range(-6..=6), 2)
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| half(rng)).collect()
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| half(rng))
}

fn random_lp(rng: &mut ChaCha8Rng) -> IneqLP {
    let (m, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let a = random_matrix(rng, m, n);
    let b = random_vector(rng, m);
    let c = random_vector(rng, n);
    IneqLP::new(a, b, c).expect("dimensions agree")
}

fn random_lps(seed_offset: u64) -> Vec<IneqLP> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + seed_offset);
    (0..INSTANCES).map(|_| random_lp(&mut rng)).collect()
}

fn random_systems(seed_offset: u64) -> Vec<(Matrix, Vector)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + seed_offset);
    (0..INSTANCES)
        .map(|_| {
            let (m, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
            (random_matrix(&mut rng, m, n), random_vector(&mut rng, m))
        })
        .collect()
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn i2() -> IneqLP {
    IneqLP::from_i64(&[&[0, 1]], &[1], &[0, 1])
}

fn i3() -> IneqLP {
    IneqLP::from_i64(&[&[1]], &[-1], &[1])
}

/// Feasibility of a system by simplex, independent of the certificate code.
fn feasible(a: Matrix, senses: Vec<RowSense>, b: Vector, kinds: Vec<VarKind>) -> Result<bool, String> {
    let lp = GeneralLP::feasibility(a, senses, b, kinds).map_err(err)?;
    Ok(simplex_solve(&lp).map_err(err)?.is_feasible())
}

fn ones_row(n: usize) -> Matrix {
    Matrix::from_row_vector(&Vector::ones(n))
}

fn criterion_1() -> Outcome {
    for (k, lp) in random_lps(1).iter().enumerate() {
        let game = build_dantzig(lp);
        check(game.payoff().is_skew_symmetric(), || format!("instance {k}: B is not skew-symmetric"))?;
        let v = solve_game(&game).map_err(err)?.value;
        check(v.is_zero(), || format!("instance {k}: value {v}"))?;
    }
    Ok(format!("{INSTANCES} Dantzig games skew-symmetric with value 0"))
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for (k, lp) in random_lps(2).iter().enumerate() {
        let direct = solve_direct(lp).map_err(err)?;
        let Some(optimum) = direct.optimum else { continue };
        count += 1;
        let s = solve_lp_via_bm(lp, None).map_err(err)?;
        check(s.m_bound == bound_m(lp), || format!("instance {k}: wrong M"))?;
        check(s.game_value.is_zero(), || format!("instance {k}: value(B_M) = {}", s.game_value))?;
        let LpVerdict::OptimalPair { x, y, value } = &s.verdict else {
            return Err(format!("instance {k}: no optimal pair extracted"));
        };
        check(lp.c.dot(x) == lp.b.dot(y), || format!("instance {k}: c^T x != y^T b"))?;
        check(lp.is_primal_feasible(x) && lp.is_dual_feasible(y), || format!("instance {k}: infeasible pair"))?;
        check(Some(value) == optimum.value(), || format!("instance {k}: {value} != {:?}", optimum.value()))?;
    }
    Ok(format!("{count} feasible-feasible instances: value(B_M) = 0 and optima match direct simplex"))
}

fn criterion_3() -> Outcome {
    let (mut count, mut enumerated, mut vertices) = (0, 0, 0);
    for (k, lp) in random_lps(3).iter().enumerate() {
        let direct = solve_direct(lp).map_err(err)?;
        if direct.optimum.is_some() {
            continue;
        }
        count += 1;
        let s = solve_lp_via_bm(lp, None).map_err(err)?;
        let v = &s.game_value;
        check(v.is_positive() && v < &Rat::one(), || format!("instance {k}: value(B_M) = {v}"))?;
        check(s.verdict.verify(lp), || format!("instance {k}: witness fails"))?;
        let size = s.game.rows() + s.game.cols();
        let strategies = if size <= VERTEX_ENUM_CAP {
            enumerated += 1;
            let all = enumerate_optimal_supports(&s.game, VERTEX_ENUM_CAP).map_err(err)?;
            check(&all.value == v, || format!("instance {k}: enumeration value {}", all.value))?;
            all.row_vertices
        } else {
            vec![s.solution.row_strategy.clone()]
        };
        for p in &strategies {
            vertices += 1;
            let (m, n) = (lp.m(), lp.n());
            check(p.probs()[m + n].is_zero(), || format!("instance {k}: r != 0"))?;
            check(&p.probs()[m + n + 1] == v, || format!("instance {k}: s != v"))?;
            let w = bm_witness(lp, p, v).map_err(|e| format!("instance {k}: {e}"))?;
            check(w.verify(lp), || format!("instance {k}: witness from vertex fails"))?;
        }
    }
    Ok(format!(
        "{count} instances with an infeasible side: 0 < v < 1; {vertices} max-min strategies \
         ({enumerated} instances fully enumerated) have r = 0, s = v and re-verify"
    ))
}

fn criterion_4() -> Outcome {
    let s = solve_lp_via_bm(&i3(), Some(&Rat::from(19))).map_err(err)?;
    check(s.game_value == Rat::new(1, 21), || format!("value(B_19) = {}", s.game_value))?;
    let w = min_slack_w(&i3()).map_err(err)?;
    check(w == Rat::one(), || format!("min_slack_w(I3) = {w}"))?;
    check(w_from_value(&Rat::from(19), &s.game_value) == w, || "w != (M+1)/(1/v-1) on I3".into())?;

    let mut count = 0;
    for (k, lp) in random_lps(4).iter().enumerate() {
        if count == 50 {
            break;
        }
        if solve_direct(lp).map_err(err)?.optimum.is_some() {
            continue;
        }
        count += 1;
        let s = solve_lp_via_bm(lp, None).map_err(err)?;
        let w = min_slack_w(lp).map_err(err)?;
        let from_v = w_from_value(&s.m_bound, &s.game_value);
        check(w == from_v, || format!("instance {k}: w = {w}, (M+1)/(1/v-1) = {from_v}"))?;
    }
    check(count == 50, || format!("only {count} infeasible instances generated"))?;
    Ok("value(B_19) = 1/21 and w = 1 on I3; w = (M+1)/(1/v-1) on 50 infeasible instances".into())
}

fn criterion_5() -> Outcome {
    // B has strategy order (y, x₁, x₂, t); row x₁ is all zero because A's
    // first column and c₁ vanish.
    let b = build_dantzig(&i2());
    check(b.payoff().row(1).iter().all(Rat::is_zero), || "row 1 of B(I2) is not zero".into())?;
    let reading = interpret_dantzig(&i2(), &MixedStrategy::pure(4, 1)).map_err(err)?;
    check(reading == DantzigReading::Inconclusive, || format!("I2 zero row reads as {reading:?}"))?;
    let s = solve_lp_via_bm(&i2(), None).map_err(err)?;
    check(s.verdict.is_optimal() && s.verdict.value() == Some(&Rat::one()), || format!("{:?}", s.verdict))?;
    Ok("I2: zero-row strategy of B is Inconclusive; B_M gives OptimalPair with value 1".into())
}

/// Whether the side not returned by an alternative is solvable, decided by
/// simplex on a normalized form of that system.
fn opposite_feasible(name: &str, a: &Matrix, b: &Vector, left_returned: bool) -> Result<bool, String> {
    use RowSense::*;
    use VarKind::*;
    let (m, n) = a.shape();
    let at = a.transpose();
    let with_row = |top: &Matrix, row: Matrix| top.vstack(&row);
    match (name, left_returned) {
        // Right sides: y with bᵀy ≤ −1.
        ("farkas-eq", true) => feasible(with_row(&at, Matrix::from_row_vector(b)), [vec![Ge; n], vec![Le]].concat(),
            Vector::zeros(n).concat(&Vector::from_i64(&[-1])), vec![Free; m]),
        ("farkas-ineq_nonneg", true) => feasible(with_row(&at, Matrix::from_row_vector(b)),
            [vec![Ge; n], vec![Le]].concat(), Vector::zeros(n).concat(&Vector::from_i64(&[-1])), vec![NonNeg; m]),
        ("farkas-ineq_free", true) => feasible(with_row(&at, Matrix::from_row_vector(b)),
            [vec![Eq; n], vec![Le]].concat(), Vector::zeros(n).concat(&Vector::from_i64(&[-1])), vec![NonNeg; m]),
        ("farkas-eq", false) => feasible(a.clone(), vec![Eq; m], b.clone(), vec![NonNeg; n]),
        ("farkas-ineq_nonneg", false) => feasible(a.clone(), vec![Le; m], b.clone(), vec![NonNeg; n]),
        ("farkas-ineq_free", false) => feasible(a.clone(), vec![Le; m], b.clone(), vec![Free; n]),
        // Gordan/Ville right: yᵀA ≥ 𝟙 (a scaling of yᵀA > 0).
        ("gordan", true) => feasible(at, vec![Ge; n], Vector::ones(n), vec![Free; m]),
        ("ville", true) => feasible(at, vec![Ge; n], Vector::ones(n), vec![NonNeg; m]),
        // Gordan/Ville left: x ≥ 0 normalized by 𝟙ᵀx = 1.
        ("gordan", false) => feasible(with_row(a, ones_row(n)), [vec![Eq; m], vec![Eq]].concat(),
            Vector::zeros(m).concat(&Vector::ones(1)), vec![NonNeg; n]),
        ("ville", false) => feasible(with_row(a, ones_row(n)), [vec![Le; m], vec![Eq]].concat(),
            Vector::zeros(m).concat(&Vector::ones(1)), vec![NonNeg; n]),
        // Stiemke right: Ax = 0 with x ≥ 𝟙 (a scaling of x > 0).
        ("stiemke", true) => feasible(with_row(a, Matrix::identity(n)), [vec![Eq; m], vec![Ge; n]].concat(),
            Vector::zeros(m).concat(&Vector::ones(n)), vec![Free; n]),
        // Stiemke left: yᵀA ≥ 0 normalized by yᵀA𝟙 = 1.
        ("stiemke", false) => feasible(with_row(&at, Matrix::from_row_vector(&a.mul_vec(&Vector::ones(n)))),
            [vec![Ge; n], vec![Eq]].concat(), Vector::zeros(n).concat(&Vector::ones(1)), vec![Free; m]),
        _ => unreachable!("unknown alternative {name}"),
    }
}

fn criterion_6() -> Outcome {
    let mut sides = [0usize; 2];
    for (k, (a, b)) in random_systems(6).iter().enumerate() {
        let mut outcomes: Vec<(String, Alternative<Vector, Vector>, bool)> = Vec::new();
        for variant in FarkasVariant::ALL.iter().copied() {
            let out = farkas(a, b, variant).map_err(err)?;
            let ok = match &out {
                Alternative::Left(x) => is_farkas_left(a, b, variant, x),
                Alternative::Right(y) => is_farkas_right(a, b, variant, y),
            };
            outcomes.push((format!("farkas-{variant}"), out, ok));
        }
        let via_ville = gordan(a, GordanMethod::ViaVille).map_err(err)?;
        let via_stiemke = gordan(a, GordanMethod::ViaStiemke).map_err(err)?;
        check(via_ville.side() == via_stiemke.side(), || format!("instance {k}: Gordan methods disagree"))?;
        for out in [via_ville, via_stiemke] {
            let ok = match &out {
                Alternative::Left(x) => is_gordan_left(a, x),
                Alternative::Right(y) => is_gordan_right(a, y),
            };
            outcomes.push(("gordan".into(), out, ok));
        }
        let out = ville(a).map_err(err)?;
        let ok = match &out {
            Alternative::Left(x) => is_ville_left(a, x),
            Alternative::Right(y) => is_ville_right(a, y),
        };
        outcomes.push(("ville".into(), out, ok));
        let out = stiemke(a).map_err(err)?;
        let ok = match &out {
            Alternative::Left(y) => is_stiemke_left(a, y),
            Alternative::Right(x) => is_stiemke_right(a, x),
        };
        outcomes.push(("stiemke".into(), out, ok));

        for (name, out, ok) in outcomes {
            check(ok, || format!("instance {k}: {name} certificate fails"))?;
            sides[usize::from(out.is_right())] += 1;
            let other = opposite_feasible(&name, a, b, out.is_left())?;
            check(!other, || format!("instance {k}: {name} opposite system is solvable"))?;
        }
    }
    Ok(format!(
        "{INSTANCES} systems x 7 alternatives ({} left, {} right): certificates verify, opposite side infeasible",
        sides[0], sides[1]
    ))
}

fn criterion_7() -> Outcome {
    for (k, (a, _)) in random_systems(7).iter().enumerate() {
        let sum = tucker_theorem(a, TuckerMethod::Summation).map_err(err)?;
        let elim = tucker_theorem(a, TuckerMethod::Elimination).map_err(err)?;
        check(sum.support == elim.support, || format!("instance {k}: S differs"))?;
        check(sum.verify(a) && elim.verify(a), || format!("instance {k}: partition fails"))?;
    }
    let i5 = Matrix::from_i64(&[&[1, -1, 0], &[0, 0, 1]]);
    for method in TuckerMethod::ALL.iter().copied() {
        let p = tucker_theorem(&i5, method).map_err(err)?;
        check(p.verify(&i5) && p.support == vec![0, 1], || format!("I5 {method}: S = {:?}", p.support))?;
        check(p.x[0].is_positive() && p.x[0] == p.x[1] && p.x[2].is_zero(), || format!("I5 x = {}", p.x))?;
        let ya = i5.vec_mul(&p.y);
        check(ya[0].is_zero() && ya[1].is_zero() && ya[2].is_positive(), || format!("I5 y^T A = {ya}"))?;
    }
    Ok(format!("{INSTANCES} matrices: both methods give the same S and valid partitions; I5 has S = {{0, 1}}"))
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for (k, lp) in random_lps(8).iter().enumerate() {
        if solve_direct(lp).map_err(err)?.optimum.is_none() {
            continue;
        }
        count += 1;
        for method in TuckerMethod::ALL.iter().copied() {
            let (x, y) = strict_complementary_pair(lp, method).map_err(err)?;
            let r = verify_optimal_pair(lp, &x, &y, true);
            check(r.pass, || format!("instance {k} ({method}): {:?}", r.first_failure))?;
        }
    }
    Ok(format!("{count} feasible-feasible instances: strictly complementary pairs verify"))
}

fn criterion_9() -> Outcome {
    let (mut infeasible, mut iis_rows) = (0, 0);
    for (k, (a, b)) in random_systems(9).iter().enumerate() {
        let n = a.cols();
        let fm = fourier_motzkin(a, b, 10_000).map_err(err)?;
        let by_simplex = feasible(a.clone(), vec![RowSense::Le; a.rows()], b.clone(), vec![VarKind::Free; n])?;
        // Ax ≤ b with x free, as the primal of an LP over x = x⁺ − x⁻.
        let split = IneqLP::new(a.hstack(&a.neg()), b.clone(), Vector::zeros(2 * n)).map_err(err)?;
        let by_game = solve_lp_via_bm(&split, None).map_err(err)?.verdict.is_optimal();
        check(fm.is_left() == by_simplex && by_simplex == by_game, || {
            format!("instance {k}: fm {} simplex {by_simplex} game {by_game}", fm.is_left())
        })?;
        if by_simplex {
            continue;
        }
        infeasible += 1;
        let iis = shrink_minimal_infeasible(a, b).map_err(err)?;
        check(iis.verify(a, b), || format!("instance {k}: IIS certificate fails"))?;
        iis_rows += iis.rows.len();
        for &i in &iis.rows {
            let rest: Vec<usize> = iis.rows.iter().copied().filter(|&r| r != i).collect();
            let ok = feasible(a.select_rows(&rest), vec![RowSense::Le; rest.len()], b.select(&rest), vec![VarKind::Free; n])?;
            check(ok, || format!("instance {k}: deleting row {i} leaves it infeasible"))?;
        }
        check((0..a.rows()).all(|i| iis.y[i].is_positive() == iis.rows.contains(&i)), || {
            format!("instance {k}: certificate support differs from the IIS")
        })?;
        let r = check_minfeas_equalities(&a.select_rows(&iis.rows), &b.select(&iis.rows)).map_err(err)?;
        check(r.pass, || format!("instance {k}: equality version fails {r:?}"))?;
    }
    Ok(format!(
        "{INSTANCES} systems: FM, simplex and B_M agree; {infeasible} infeasible, IISs ({iis_rows} rows) minimal"
    ))
}

fn criterion_10() -> Outcome {
    let (mut feasible_count, mut infeasible_count) = (0, 0);
    for (k, lp) in random_lps(10).iter().filter(|lp| lp.m() + lp.n() < 6).enumerate() {
        let br = solve_lp_via_brooks_reny(lp, 6).map_err(err)?;
        let bm = solve_lp_via_bm(lp, None).map_err(err)?;
        match (&br.verdict, &bm.verdict) {
            (LpVerdict::OptimalPair { value, .. }, LpVerdict::OptimalPair { value: expected, .. }) => {
                feasible_count += 1;
                check(br.game_value.is_zero(), || format!("instance {k}: value(P) = {}", br.game_value))?;
                check(value == expected, || format!("instance {k}: {value} != {expected}"))?;
            }
            (LpVerdict::NoOptimum(w), LpVerdict::NoOptimum(_)) => {
                infeasible_count += 1;
                check(br.game_value.is_positive(), || format!("instance {k}: value(P) = {}", br.game_value))?;
                check(lp.is_no_optimum_witness(&w.x, &w.y), || format!("instance {k}: witness fails"))?;
            }
            _ => return Err(format!("instance {k}: Brooks-Reny and B_M disagree")),
        }
        check(br.verdict.verify(lp), || format!("instance {k}: verdict fails"))?;
    }
    Ok(format!("{feasible_count} feasible (value 0, optima match) and {infeasible_count} infeasible (value > 0) instances"))
}

fn criterion_11() -> Outcome {
    let game = ZeroSumGame::new(Matrix::from_i64(&[&[1, 2, 0], &[1, 0, 2]])).map_err(err)?;
    let v = solve_game(&game).map_err(err)?.value;
    check(v == Rat::one(), || format!("value(I4) = {v}"))?;
    let all = enumerate_optimal_supports(&game, 10).map_err(err)?;
    check(all.col_vertices.contains(&MixedStrategy::pure(3, 0)), || "first column is not min-max".into())?;
    Ok(format!("value(I4) = 1; {} min-max vertices include the first pure column", all.col_vertices.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Dantzig game value zero", criterion_1),
        ("B_M value zero on feasible pairs", criterion_2),
        ("B_M value in (0,1) with an infeasible side", criterion_3),
        ("min-slack identity", criterion_4),
        ("Dantzig inconclusive hole on I2", criterion_5),
        ("alternative dichotomies", criterion_6),
        ("Tucker partition", criterion_7),
        ("strict complementarity", criterion_8),
        ("infeasibility oracle agreement", criterion_9),
        ("Brooks-Reny cross-check", criterion_10),
        ("game example I4", criterion_11),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (status, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status} [{name}] {detail} ({:.1}s)", i + 1, t.elapsed().as_secs_f64());
    }
    println!("{} of 11 criteria pass in {:.1}s", 11 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
