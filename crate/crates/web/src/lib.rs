//! Browser bindings: JSON problem text in, JSON report text out.
//!
//! The reports are the same as the `duality` CLI prints, so the page can show
//! the verdict, the exact certificate and every identity that was checked.

use duality_core::certificates::FarkasVariant;
use duality_core::problem::parse_problem;
use duality_core::report::{run, Command, Options};
use duality_core::Rat;
use wasm_bindgen::prelude::*;

fn report(command: Command, options: Options, problem: &str) -> Result<String, String> {
    let problem = parse_problem(problem).map_err(|e| e.to_string())?;
    let report = run(&command, &options, &problem).map_err(|e| e.to_string())?;
    Ok(report.to_json_string())
}

/// Solves an `lp` problem through the game `B_M`; an empty `m` selects the
/// closed-form bound.
pub fn solve_lp_report(problem: &str, m: &str) -> Result<String, String> {
    let m = match m.trim() {
        "" => None,
        text => Some(text.parse::<Rat>().map_err(|e| format!("M: {e}"))?),
    };
    report(Command::Solve, Options { m, ..Options::default() }, problem)
}

/// Solves a `game` problem, listing every optimal vertex strategy.
pub fn solve_game_report(problem: &str) -> Result<String, String> {
    report(Command::Game { vertices: true }, Options::default(), problem)
}

/// Farkas alternative for a `system` problem; `variant` is `eq`,
/// `ineq_nonneg` or `ineq_free`.
pub fn farkas_report(problem: &str, variant: &str) -> Result<String, String> {
    let variant = variant.parse::<FarkasVariant>()?;
    report(Command::Farkas { variant }, Options::default(), problem)
}

#[wasm_bindgen(js_name = solveLp)]
pub fn solve_lp(problem: &str, m: &str) -> Result<String, JsError> {
    solve_lp_report(problem, m).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = solveGame)]
pub fn solve_game(problem: &str) -> Result<String, JsError> {
    solve_game_report(problem).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn farkas(problem: &str, variant: &str) -> Result<String, JsError> {
    farkas_report(problem, variant).map_err(|e| JsError::new(&e))
}
