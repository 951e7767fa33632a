//! Graphviz export.

use std::fmt::Write;

use super::Afsa;

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

impl Afsa {
    /// DOT digraph with one edge per transition, labeled `a|b` (`-` for the
    /// empty label); final states are drawn doubled.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph afsa {{").unwrap();
        writeln!(out, "    rankdir=LR;").unwrap();
        writeln!(out, "    __start [shape=point];").unwrap();
        for state in &self.states {
            let shape = if self.finals.contains(state) {
                "doublecircle"
            } else {
                "circle"
            };
            writeln!(out, "    {} [shape={shape}];", quote(state)).unwrap();
        }
        writeln!(out, "    __start -> {};", quote(&self.start)).unwrap();
        let label = |l: Option<char>| l.map(String::from).unwrap_or_else(|| "-".into());
        for t in &self.transitions {
            writeln!(
                out,
                "    {} -> {} [label=\"{}|{}\"];",
                quote(&t.from),
                quote(&t.to),
                label(t.first),
                label(t.second)
            )
            .unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}
