//! Report layout: the canonical JSON envelope and the human text form.
//!
//! Every command's JSON output is the same five-field envelope — `command`,
//! `lattice`, `version`, `notes`, `result` — serialized compactly in that
//! order, so two runs over the same input are byte-identical. The text form
//! is for people at a terminal and is not a stability surface.

use clap::ValueEnum;
use omlkit::{Elem, LatticeTables};
use serde::Serialize;

/// Output style selected by `--format`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-oriented lines; layout may change between releases.
    Text,
    /// Canonical JSON: compact, fixed field order, byte-stable.
    Json,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    lattice: &'a str,
    version: &'a str,
    notes: &'a [String],
    result: &'a T,
}

/// Lay out one report in the requested format, newline-terminated.
pub fn render<T: Serialize>(
    format: Format,
    command: &str,
    lattice: &str,
    notes: &[String],
    result: &T,
    text_body: &str,
) -> String {
    match format {
        Format::Json => {
            let envelope = Envelope {
                command,
                lattice,
                version: omlkit::VERSION,
                notes,
                result,
            };
            let mut out = serde_json::to_string(&envelope).expect("reports always serialize");
            out.push('\n');
            out
        }
        Format::Text => {
            let mut out = format!("{command} {lattice} (omlkit {})\n", omlkit::VERSION);
            for note in notes {
                out.push_str("note: ");
                out.push_str(note);
                out.push('\n');
            }
            out.push_str(text_body);
            if !out.ends_with('\n') {
                out.push('\n');
            }
            out
        }
    }
}

/// `{a1, a2'}`-style member list rendered with the lattice's labels.
pub fn braced_labels(l: &LatticeTables, members: &[Elem]) -> String {
    let inner: Vec<&str> = members.iter().map(|&e| l.label(e)).collect();
    format!("{{{}}}", inner.join(", "))
}

/// Result payload of `cover`.
#[derive(Serialize)]
pub struct CoverResult {
    pub element: Elem,
    pub cover: Elem,
}

/// Result payload of `enumerate-subalgebras`.
#[derive(Serialize)]
pub struct SubalgebraList {
    pub count: usize,
    pub subalgebras: Vec<omlkit::Sublattice>,
}

/// Result payload of `enumerate-bvb`.
#[derive(Serialize)]
pub struct EndoList {
    pub count: usize,
    pub endos: Vec<omlkit::Endomap>,
}
