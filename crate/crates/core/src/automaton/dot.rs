use std::fmt::Write;

use super::Dfa;

/// Graphviz rendering. Accepting states are double circles, the start state
/// is drawn bold, and every transition is its own labeled edge.
pub fn export_dot(dfa: &Dfa) -> String {
    let mut out = String::new();
    out.push_str("digraph dfa {\n");
    out.push_str("    rankdir=LR;\n");
    for s in 0..dfa.state_count() {
        let shape = if dfa.is_accepting(s) {
            "doublecircle"
        } else {
            "circle"
        };
        let style = if s == dfa.start() { ", style=bold" } else { "" };
        writeln!(out, "    \"{}\" [shape={shape}{style}];", dfa.label(s)).unwrap();
    }
    for s in 0..dfa.state_count() {
        for b in 0..2 {
            writeln!(
                out,
                "    \"{}\" -> \"{}\" [label=\"{b}\"];",
                dfa.label(s),
                dfa.label(dfa.next(s, b))
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::super::build_recognizer;
    use super::*;

    fn nodes(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("[shape=")).count()
    }

    fn edges(dot: &str) -> usize {
        dot.lines()
            .filter(|l| l.contains("->") && l.contains("label="))
            .count()
    }

    #[test]
    fn minimized_recognizer_structure() {
        let dot = export_dot(&build_recognizer().minimize());
        assert!(dot.starts_with("digraph"));
        assert_eq!(nodes(&dot), 5);
        assert_eq!(edges(&dot), 10);
        assert_eq!(dot.matches("doublecircle").count(), 2);
        assert_eq!(dot, export_dot(&build_recognizer().minimize()));
    }

    #[test]
    fn single_state() {
        let dfa = Dfa::new(vec![[0, 0]], 0, vec![false]).unwrap();
        let dot = export_dot(&dfa);
        assert_eq!(nodes(&dot), 1);
        assert_eq!(edges(&dot), 2);
    }
}
