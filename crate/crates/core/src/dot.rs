//! Graphviz export. Output depends only on the automaton, so it is
//! byte-identical across runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::automaton::Dfao;
use crate::symbol_to_string;
use crate::transducer::Transducer;

fn header(s: &mut String, name: &str, initial: usize) {
    let _ = writeln!(s, "digraph {name} {{");
    s.push_str("  rankdir=LR;\n");
    s.push_str("  node [shape=circle];\n");
    s.push_str("  init [shape=point];\n");
    let _ = writeln!(s, "  init -> {initial};");
}

/// Parallel edges are merged into one edge with a comma-separated label.
fn edges(s: &mut String, from: usize, labelled: impl IntoIterator<Item = (usize, String)>) {
    let mut grouped: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (to, label) in labelled {
        grouped.entry(to).or_default().push(label);
    }
    for (to, labels) in grouped {
        let _ = writeln!(s, "  {from} -> {to} [label=\"{}\"];", labels.join(", "));
    }
}

pub fn dfao_to_dot(m: &Dfao) -> String {
    let mut s = String::new();
    header(&mut s, "dfao", m.initial());
    for q in 0..m.state_count() {
        let _ = writeln!(
            s,
            "  {q} [label=\"{q}/{}\"];",
            symbol_to_string(m.output(q))
        );
    }
    for q in 0..m.state_count() {
        let out = m
            .transitions(q)
            .iter()
            .enumerate()
            .filter_map(|(d, t)| t.map(|t| (t, d.to_string())));
        edges(&mut s, q, out);
    }
    s.push_str("}\n");
    s
}

pub fn transducer_to_dot(t: &Transducer) -> String {
    let mut s = String::new();
    header(&mut s, "transducer", t.initial());
    for v in 0..t.state_count() {
        let out = t.alphabet().iter().enumerate().map(|(i, &a)| {
            let (to, o) = t.edge(v, i);
            (
                to,
                format!("{}/{}", symbol_to_string(a), symbol_to_string(o)),
            )
        });
        edges(&mut s, v, out);
    }
    s.push_str("}\n");
    s
}
