//! Plain-text renderings of reports for the command line.

use std::fmt::Write;

use litgame_core::classifier::{ClassReport, OrbitClass, Verdict};
use litgame_core::game::{Configuration, OrbitTable, Solution};
use litgame_core::graph::StructuralReport;

/// Vertex numbering used for output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Numbering {
    pub one_indexed: bool,
}

impl Numbering {
    pub fn label(&self, v: usize) -> usize {
        v + self.one_indexed as usize
    }

    pub fn set(&self, vs: &[usize]) -> String {
        let items: Vec<String> = vs.iter().map(|&v| self.label(v).to_string()).collect();
        format!("{{{}}}", items.join(","))
    }

    fn list(&self, vs: &[usize]) -> String {
        if vs.is_empty() {
            return "none".into();
        }
        let items: Vec<String> = vs.iter().map(|&v| self.label(v).to_string()).collect();
        items.join(" ")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

pub fn analysis(report: &ClassReport, structure: &StructuralReport, num: Numbering) -> String {
    let mut out = String::new();
    let edges: usize = structure.degrees.iter().sum::<usize>() / 2;
    writeln!(out, "graph: {} vertices, {} edges", report.order, edges).unwrap();
    match report.verdict {
        Verdict::DegenerateOutOfScope => {
            writeln!(out, "degenerate (rank {}); theorems out of scope", report.rank).unwrap();
        }
        Verdict::LineGraphOutOfScope => {
            writeln!(out, "nondegenerate: yes").unwrap();
            writeln!(out, "nondegenerate line graph; orbit classification out of scope").unwrap();
        }
        Verdict::Classified => writeln!(out, "nondegenerate: yes").unwrap(),
    }
    if let Some(arf) = report.arf {
        writeln!(out, "arf: {arf}").unwrap();
    }
    if let Some(q) = &report.dual_q_values {
        let bits: String = q.iter().map(|b| char::from(b'0' + b)).collect();
        writeln!(out, "dual Q values: {bits}").unwrap();
    }
    if let (Some(min), Some(one)) = (report.min_light, report.one_lit) {
        writeln!(out, "min_light: {min}").unwrap();
        writeln!(out, "1-lit: {}", yes_no(one)).unwrap();
    }
    if let Some(w) = &report.witnesses {
        writeln!(out, "witnesses: Q0 {}, Q1 {}", num.set(&w.q0), num.set(&w.q1)).unwrap();
    }
    if let Some(sizes) = &report.orbit_sizes {
        writeln!(out, "orbit sizes: zero 1, Q0 {}, Q1 {}", sizes.q0_nonzero, sizes.q1).unwrap();
        writeln!(out, "move group order: {}", sizes.group_order).unwrap();
    }
    match &structure.bipartition {
        Some([a, b]) => writeln!(out, "bipartite: {} | {}", num.set(a), num.set(b)).unwrap(),
        None => writeln!(out, "bipartite: no").unwrap(),
    }
    let degrees: Vec<String> = structure.degrees.iter().map(|d| d.to_string()).collect();
    writeln!(out, "degrees: {}", degrees.join(" ")).unwrap();
    writeln!(out, "cut vertices: {}", num.list(&structure.cut_vertices)).unwrap();
    let blocks: Vec<String> = structure.blocks.iter().map(|b| num.set(b)).collect();
    writeln!(out, "blocks: {}", blocks.join(" ")).unwrap();
    writeln!(out, "claw-free: {}", yes_no(structure.claw_free)).unwrap();
    writeln!(out, "block graph: {}", yes_no(structure.block_graph)).unwrap();
    out
}

pub fn solution(start: &Configuration, sol: &Solution, num: Numbering) -> String {
    if sol.moves.is_empty() {
        return format!("already minimal, 0 moves\ntarget weight: {}\nconfiguration: {start}\n", start.weight());
    }
    let moves: Vec<String> = sol.moves.0.iter().map(|&v| num.label(v).to_string()).collect();
    format!(
        "target weight: {}\nmoves ({}): {}\nfinal: {} on {}\n",
        sol.target.weight(),
        sol.moves.len(),
        moves.join(" "),
        sol.target,
        num.set(&sol.target.on_vertices())
    )
}

pub fn orbits(table: &OrbitTable, classes: Option<&[OrbitClass]>, num: Numbering) -> String {
    let n = table.order();
    let mut out = format!("{} orbits on {} configurations\n", table.orbit_count(), 1u64 << n);
    writeln!(out, "{:>4} {:>10} {:>6}  class  witness", "id", "size", "weight").unwrap();
    for (id, o) in table.orbits().iter().enumerate() {
        let class = classes.map_or("-".to_string(), |c| class_label(c[id]).to_string());
        let witness = Configuration::from_bits(n, o.witness).expect("witness fits");
        writeln!(out, "{id:>4} {:>10} {:>6}  {class:<5}  {}", o.size, o.min_weight, num.set(&witness.on_vertices())).unwrap();
    }
    writeln!(out, "min light number: {}", table.min_light_number()).unwrap();
    out
}

/// The graph file format, numbered as requested.
pub fn graph_text(g: &litgame_core::graph::Graph, num: Numbering) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", num.label(u), num.label(v)).unwrap();
    }
    out
}

pub fn class_label(c: OrbitClass) -> &'static str {
    match c {
        OrbitClass::Zero => "ZERO",
        OrbitClass::Q0 => "Q0",
        OrbitClass::Q1 => "Q1",
    }
}
