//! Plain-text and Graphviz renderings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use itertools::Itertools;

use crate::bricks::BrickDiagram;
use crate::canjoin::{DCase, DescentDatum, ValueSet};
use crate::coxeter::{CoxeterElement, Family};
use crate::semibricks::Semibrick;

fn set(s: &ValueSet) -> String {
    format!("{{{}}}", s.iter().join(","))
}

/// Type A: a single chain such as `1←2→3`. Type D: the lower row `V+` and
/// the upper row `V-` aligned by absolute value, then the arrows between rows.
pub fn diagram_text(d: &BrickDiagram) -> String {
    match d.dynkin.family {
        Family::A => chain(d, &d.v_plus),
        Family::D => two_rows(d),
    }
}

fn has(d: &BrickDiagram, s: i32, t: i32) -> bool {
    d.arrows.binary_search(&(s, t)).is_ok()
}

fn chain(d: &BrickDiagram, row: &[i32]) -> String {
    let mut out = row[0].to_string();
    for (&x, &y) in row.iter().tuple_windows() {
        out.push(if has(d, x, y) { '→' } else if has(d, y, x) { '←' } else { ' ' });
        out.push_str(&y.to_string());
    }
    out
}

fn two_rows(d: &BrickDiagram) -> String {
    let symbols = d.symbols();
    let width = symbols.iter().map(|s| s.to_string().len()).max().unwrap_or(1);
    let lo = symbols.iter().map(|s| s.abs()).min().unwrap_or(1);
    let hi = symbols.iter().map(|s| s.abs()).max().unwrap_or(1);
    let row_text = |row: &[i32]| {
        let at: BTreeMap<i32, i32> = row.iter().map(|&s| (s.abs(), s)).collect();
        let mut line = String::new();
        for k in lo..=hi {
            match at.get(&k) {
                Some(s) => write!(line, "{s:>width$}").unwrap(),
                None => line.push_str(&" ".repeat(width)),
            }
            if k < hi {
                let sep = match (at.get(&k), at.get(&(k + 1))) {
                    (Some(&x), Some(&y)) if has(d, x, y) => " → ",
                    (Some(&x), Some(&y)) if has(d, y, x) => " ← ",
                    _ => "   ",
                };
                line.push_str(sep);
            }
        }
        line.trim_end().to_string()
    };
    let mut lines = Vec::new();
    if !d.v_minus.is_empty() {
        lines.push(row_text(&d.v_minus));
    }
    lines.push(row_text(&d.v_plus));
    let cross: Vec<(i32, i32)> = d
        .arrows
        .iter()
        .copied()
        .filter(|(s, t)| d.v_plus.contains(s) != d.v_plus.contains(t))
        .sorted_by_key(|&(s, t)| (s.abs().min(t.abs()), s.abs().max(t.abs()), s, t))
        .collect();
    if !cross.is_empty() {
        lines.push(format!("cross: {}", cross.iter().map(|(s, t)| format!("{s} → {t}")).join(", ")));
    }
    lines.join("\n")
}

/// One block per summand, headed by its descent.
pub fn semibrick_text(s: &Semibrick) -> String {
    if s.summands.is_empty() {
        return "0".to_string();
    }
    s.summands
        .iter()
        .map(|x| {
            let body = diagram_text(&x.diagram);
            if body.contains('\n') {
                format!("S_{}:\n{}", x.d, body.lines().map(|l| format!("  {l}")).join("\n"))
            } else {
                format!("S_{}: {body}", x.d)
            }
        })
        .join("\n")
}

/// The table of `(d, a_d, b_d, case, R_d, w_d)`; the case column is type D only.
pub fn decompose_table(w: &CoxeterElement, rows: &[DescentDatum]) -> String {
    let with_case = w.dynkin().family == Family::D;
    let mut table: Vec<Vec<String>> = vec![];
    let mut header = vec!["d", "a_d", "b_d"];
    if with_case {
        header.push("case");
    }
    header.extend(["R_d", "w_d"]);
    table.push(header.into_iter().map(String::from).collect());
    for r in rows {
        let mut line = vec![r.d.to_string(), r.a.to_string(), r.b.to_string()];
        if with_case {
            line.push(
                match r.case {
                    Some(DCase::A) => "(A)",
                    Some(DCase::B) => "(B)",
                    None => "-",
                }
                .to_string(),
            );
        }
        line.push(set(&r.r));
        line.push(format!("({})", r.element));
        table.push(line);
    }
    let cols = table[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| table.iter().map(|r| r[c].chars().count()).max().unwrap())
        .collect();
    table
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(c, x)| format!("{x:<w$}", w = widths[c]))
                .join("  ")
                .trim_end()
                .to_string()
        })
        .join("\n")
}

/// `(w) = (u) ∨ (v) ∨ ...`, joinands in window order.
pub fn cjr_text(w: &CoxeterElement, joinands: &BTreeSet<CoxeterElement>) -> String {
    if joinands.is_empty() {
        return format!("({w}) = e");
    }
    format!("({w}) = {}", joinands.iter().map(|u| format!("({u})")).join(" ∨ "))
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

pub fn diagram_dot(d: &BrickDiagram) -> String {
    let mut out = String::from("digraph brick {\n  rankdir=LR;\n");
    for s in d.symbols() {
        let rank = if d.v_plus.contains(&s) { "lower" } else { "upper" };
        writeln!(out, "  {} [label={}, group={rank}];", dot_id(&s.to_string()), dot_id(&s.to_string())).unwrap();
    }
    for (s, t) in &d.arrows {
        writeln!(out, "  {} -> {};", dot_id(&s.to_string()), dot_id(&t.to_string())).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Weak order Hasse diagram, edges pointing up.
pub fn hasse_dot(edges: &[(CoxeterElement, CoxeterElement)], elements: &[CoxeterElement]) -> String {
    let mut out = String::from("digraph weak_order {\n  rankdir=BT;\n");
    for w in elements {
        writeln!(out, "  {};", dot_id(&w.to_string())).unwrap();
    }
    for (u, v) in edges {
        writeln!(out, "  {} -> {};", dot_id(&u.to_string()), dot_id(&v.to_string())).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bricks::brick_diagram;
    use crate::canjoin::decompose;
    use crate::coxeter::DynkinType;
    use crate::semibricks::{semibrick, semibrick_direct};

    fn el(t: DynkinType, s: &str) -> CoxeterElement {
        CoxeterElement::parse(t, s).unwrap()
    }

    #[test]
    fn type_a_chain() {
        let w = el(DynkinType::a(8), "2,5,8,1,3,4,6,7,9");
        assert_eq!(diagram_text(&brick_diagram(&w).unwrap()), "1←2→3→4←5→6→7");
    }

    #[test]
    fn d9_first_display() {
        let w = el(DynkinType::d(9), "9,-7,-6,-4,-1,2,3,5,8");
        let text = diagram_text(&brick_diagram(&w).unwrap());
        let expected = [
            " 1 → -2 → -3 ← -4 → -5 ← -6",
            "-1 →  2 →  3 ←  4 →  5 ←  6 ←  7 →  8",
            "cross: -2 → -1, -3 → 2, -3 → 4, -5 → 4, -5 → 6, -6 → 7",
        ]
        .join("\n");
        assert_eq!(text, expected);
    }

    #[test]
    fn single_row_and_simple() {
        let t = DynkinType::d(5);
        let d = brick_diagram(&el(t, "-3,-1,2,4,5")).unwrap();
        assert_eq!(diagram_text(&d), "-1 →  2");
        let d = brick_diagram(&CoxeterElement::simple_reflection(t, 3).unwrap()).unwrap();
        assert_eq!(diagram_text(&d), "3");
    }

    #[test]
    fn a8_semibrick_and_table() {
        let w = el(DynkinType::a(8), "4,9,3,6,2,8,5,1,7");
        assert_eq!(
            semibrick_text(&semibrick(&w).unwrap()),
            "S_2: 3←4→5→6→7→8\nS_4: 2←3←4→5\nS_6: 5←6→7\nS_7: 1←2←3←4"
        );
        let table = decompose_table(&w, &decompose(&w).unwrap());
        assert_eq!(
            table,
            [
                "d  a_d  b_d  R_d          w_d",
                "2  9    3    {3,5,6,7,8}  (1,2,4,9,3,5,6,7,8)",
                "4  6    2    {2,5,7,8,9}  (1,3,4,6,2,5,7,8,9)",
                "6  8    5    {5,7,9}      (1,2,3,4,6,8,5,7,9)",
                "7  5    1    {1,6,7,8,9}  (2,3,4,5,1,6,7,8,9)",
            ]
            .join("\n")
        );
        assert_eq!(semibrick_text(&semibrick(&CoxeterElement::identity(DynkinType::a(2))).unwrap()), "0");
    }

    #[test]
    fn d9_semibrick_blocks() {
        let w = el(DynkinType::d(9), "5,3,-7,4,-6,-8,9,-1,2");
        let text = semibrick_text(&semibrick_direct(&w).unwrap());
        assert!(text.starts_with("S_1: 3 → 4\nS_2:\n   1 → -2\n  -1 →  2 ←  3 →  4 →  5 ←  6\n  cross: -2 → -1, -2 → 3\n"), "{text}");
    }

    #[test]
    fn a3_cjr_line() {
        let w = el(DynkinType::a(3), "4,3,1,2");
        let u = crate::canjoin::cjr_direct(&w).unwrap();
        assert_eq!(cjr_text(&w, &u), "(4,3,1,2) = (1,2,4,3) ∨ (3,1,2,4)");
        let e = CoxeterElement::identity(DynkinType::a(3));
        assert_eq!(cjr_text(&e, &BTreeSet::new()), "(1,2,3,4) = e");
    }

    #[test]
    fn dot_outputs() {
        let w = el(DynkinType::a(3), "2,1,3,4");
        let d = diagram_dot(&brick_diagram(&w).unwrap());
        assert!(d.starts_with("digraph brick {") && d.contains("\"1\" [label=\"1\""));
        let a = CoxeterElement::identity(DynkinType::a(1));
        let b = CoxeterElement::longest(DynkinType::a(1));
        let h = hasse_dot(&[(a.clone(), b.clone())], &[a, b]);
        assert!(h.contains("\"1,2\" -> \"2,1\";"));
    }
}
