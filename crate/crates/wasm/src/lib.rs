//! Browser bindings: a random torus instance with its optimal tour, the
//! curling extension of a string, and the value histogram of the
//! self-describing letter sequence. Every function returns a JSON string;
//! failures come back as `{"error": "..."}`.

use hateful::angelini::{self, LanguageTable};
use hateful::curling::{self, CurlString};
use hateful::tsp::{self, eel_constant};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const MAX_POINTS: usize = 12;
const MAX_STEPS: usize = 5000;
const MAX_TERMS: usize = 2_000_000;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn respond(r: Result<Value, String>) -> String {
    r.map_or_else(error, |v| v.to_string())
}

/// `n` uniform points on the unit torus (instance `trial` of stream `seed`)
/// and a shortest closed tour through them.
#[wasm_bindgen]
pub fn torus_tour(n: usize, seed: u64, trial: u64) -> String {
    respond((|| {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(format!("choose between 1 and {MAX_POINTS} points"));
        }
        let points = tsp::random_instance(n, seed, trial);
        let tour = tsp::optimal_tour(&points).map_err(|e| e.to_string())?;
        Ok(json!({
            "points": points.iter().map(|p| [p.x(), p.y()]).collect::<Vec<_>>(),
            "order": tour.order,
            "length": tour.length,
            "length_eels": tour.length / eel_constant(),
        }))
    })())
}

/// Append curling numbers to `symbols` until a 1 is appended.
#[wasm_bindgen]
pub fn curling_extension(symbols: &str) -> String {
    respond((|| {
        let s: CurlString = symbols.trim().parse().map_err(|e: curling::CurlingError| e.to_string())?;
        let r = curling::extend_until_one(&s, MAX_STEPS).map_err(|e| e.to_string())?;
        Ok(json!({
            "initial": s.symbols(),
            "curling_number": curling::curling_number(s.symbols()),
            "extended": r.extended.symbols(),
            "tail_length": r.tail_length,
        }))
    })())
}

/// Relative frequency of each value among the first `count` terms of the
/// English self-describing sequence started at `seed`.
#[wasm_bindgen]
pub fn angelini_histogram(seed: u32, count: usize) -> String {
    respond((|| {
        if count == 0 || count > MAX_TERMS {
            return Err(format!("choose between 1 and {MAX_TERMS} terms"));
        }
        let terms = angelini::generate(seed, count, &LanguageTable::english()).map_err(|e| e.to_string())?;
        let freq = angelini::frequencies(&terms).map_err(|e| e.to_string())?;
        Ok(json!({
            "count": count,
            "first_terms": &terms[..terms.len().min(40)],
            "histogram": freq.iter().map(|(v, f)| json!({ "value": v, "frequency": f })).collect::<Vec<_>>(),
        }))
    })())
}
