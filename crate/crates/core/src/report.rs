//! Line-oriented text reports. The first line of a verdict report is always
//! `verdict=ENTAILED|NOT-ENTAILED engine=<name>`.

use alloc::string::String;
use core::fmt::Write;

use crate::engine::{Verdict, Witness};
use crate::oracle::ModelFamily;

pub fn verdict_line(verdict: &Verdict) -> String {
    let word = if verdict.entailed { "ENTAILED" } else { "NOT-ENTAILED" };
    alloc::format!("verdict={word} engine={}", verdict.engine)
}

/// The verdict line, any notes, and the witness when asked for and present.
pub fn render_verdict(verdict: &Verdict, with_witness: bool) -> String {
    let mut out = verdict_line(verdict);
    out.push('\n');
    for note in &verdict.notes {
        let _ = writeln!(out, "note: {note}");
    }
    if with_witness {
        if let Some(w) = &verdict.witness {
            out.push_str(&render_witness(w));
        }
    }
    out
}

pub fn render_witness(w: &Witness) -> String {
    let mut out = String::from("partition:\n");
    for (i, atom) in w.table.atoms().iter().enumerate() {
        let side = if w.partition.in_p(i) { 'P' } else { 'N' };
        let _ = writeln!(out, "  {side} {atom}");
    }
    let _ = writeln!(out, "ob: {}", w.ob);
    let _ = writeln!(out, "initial-world: {}", w.initial_world);
    out
}

pub fn render_models(families: &[ModelFamily]) -> String {
    let mut out = alloc::format!("models={}\n", families.len());
    for (i, family) in families.iter().enumerate() {
        let _ = writeln!(
            out,
            "model {}: worlds={} initial-worlds={}",
            i + 1,
            family.worlds,
            family.initial_worlds
        );
    }
    out
}
