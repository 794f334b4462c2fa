//! Playground state for the browser demo. The page in `www/` drives a
//! [`Playground`]: load or generate a graph, click lit vertices, ask for
//! hints and read the analysis.

use litgame_core::classifier::{classify_graph, OrbitClass, OrbitClassifier};
use litgame_core::game::{apply_move, Configuration, OrbitDistances, DEFAULT_ORBIT_CAP};
use litgame_core::graph::{generate_graph, parse_graph_any, structural_report, Graph, GraphKind};
use wasm_bindgen::prelude::*;

#[wasm_bindgen]
pub struct Playground {
    graph: Graph,
    config: Configuration,
    history: Vec<usize>,
    classifier: Option<OrbitClassifier>,
    distances: Option<OrbitDistances>,
    /// Column count when the graph came from the grid generator.
    grid_cols: Option<usize>,
}

impl Playground {
    fn with_graph(graph: Graph, grid_cols: Option<usize>) -> Playground {
        let classifier = OrbitClassifier::new(&graph).ok();
        Playground { config: Configuration::all_off(graph.order()), graph, history: Vec::new(), classifier, distances: None, grid_cols }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn configuration(&self) -> Configuration {
        self.config
    }

    fn class(&self) -> Option<OrbitClass> {
        self.classifier.as_ref().map(|c| c.classify(&self.config).expect("dimension matches"))
    }

    fn field(&mut self) -> Result<&OrbitDistances, String> {
        let stale = match &self.distances {
            Some(d) => d.distance(&self.config).is_none(),
            None => true,
        };
        if stale {
            let d = OrbitDistances::new(&self.graph, &self.config, DEFAULT_ORBIT_CAP).map_err(|e| e.to_string())?;
            self.distances = Some(d);
        }
        Ok(self.distances.as_ref().unwrap())
    }
}

#[wasm_bindgen]
impl Playground {
    /// Parses the graph file format or its JSON form.
    #[wasm_bindgen(constructor)]
    pub fn new(text: &str) -> Result<Playground, String> {
        parse_graph_any(text).map(|g| Playground::with_graph(g, None)).map_err(|e| e.to_string())
    }

    /// `kind` is one of path, cycle, complete, star, grid, tree; `params`
    /// is a comma-separated list.
    pub fn generate(kind: &str, params: &str, seed: Option<u32>) -> Result<Playground, String> {
        let kind: GraphKind = kind.parse().map_err(|e: litgame_core::graph::GraphError| e.to_string())?;
        let params: Vec<i64> = params
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|_| format!("`{s}` is not an integer")))
            .collect::<Result<_, _>>()?;
        let g = generate_graph(kind, &params, seed.map(u64::from)).map_err(|e| e.to_string())?;
        let cols = (kind == GraphKind::Grid).then(|| params[1] as usize);
        Ok(Playground::with_graph(g, cols))
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Edges as a flat list `[u0, v0, u1, v1, ...]`.
    pub fn edges(&self) -> Vec<u32> {
        self.graph.edges().flat_map(|(u, v)| [u as u32, v as u32]).collect()
    }

    pub fn config(&self) -> String {
        self.config.to_bitstring()
    }

    /// Starts a new game from a bitstring or on-vertex list.
    pub fn set_config(&mut self, text: &str) -> Result<(), String> {
        self.config = Configuration::parse(text, self.graph.order(), false).map_err(|e| e.to_string())?;
        self.history.clear();
        Ok(())
    }

    pub fn is_on(&self, v: usize) -> bool {
        v < self.graph.order() && self.config.is_on(v)
    }

    pub fn weight(&self) -> u32 {
        self.config.weight()
    }

    /// Plays vertex `v`. Returns false, changing nothing, when `v` is off.
    pub fn click(&mut self, v: usize) -> bool {
        if !self.is_on(v) {
            return false;
        }
        self.config = apply_move(&self.graph, &self.config, v).expect("vertex in range");
        self.history.push(v);
        true
    }

    /// Takes back the last move. Moves are involutions, so this replays it.
    pub fn undo(&mut self) -> bool {
        match self.history.pop() {
            Some(v) => {
                self.config = apply_move(&self.graph, &self.config, v).expect("vertex in range");
                true
            }
            None => false,
        }
    }

    pub fn history(&self) -> Vec<u32> {
        self.history.iter().map(|&v| v as u32).collect()
    }

    /// Next move of a shortest sequence to the orbit's minimum weight, or
    /// none when already there.
    pub fn hint(&mut self) -> Result<Option<usize>, String> {
        let config = self.config;
        Ok(self.field()?.hint(&config))
    }

    pub fn target_weight(&mut self) -> Result<u32, String> {
        Ok(self.field()?.target_weight())
    }

    /// `ZERO`, `Q0` or `Q1`, or none when the classification does not apply.
    pub fn orbit_class(&self) -> Option<String> {
        self.class().map(|c| serde_json::to_value(c).unwrap().as_str().unwrap().to_string())
    }

    /// Classification and structure of the graph as JSON.
    pub fn analyze(&self) -> String {
        serde_json::json!({ "report": classify_graph(&self.graph), "structure": structural_report(&self.graph) }).to_string()
    }

    /// Vertex positions `[x0, y0, x1, y1, ...]` inside a `width` by `height`
    /// box. Grids use their coordinates; other graphs get a seeded spring
    /// layout, so the picture is the same on every load.
    pub fn layout(&self, width: f64, height: f64) -> Vec<f64> {
        let n = self.graph.order();
        let mut pos: Vec<(f64, f64)> = match self.grid_cols {
            Some(cols) => (0..n).map(|v| ((v % cols) as f64, (v / cols) as f64)).collect(),
            None => spring_layout(&self.graph),
        };
        fit(&mut pos, width, height);
        pos.into_iter().flat_map(|(x, y)| [x, y]).collect()
    }
}

fn spring_layout(g: &Graph) -> Vec<(f64, f64)> {
    let n = g.order();
    let mut pos: Vec<(f64, f64)> = (0..n)
        .map(|v| {
            let a = std::f64::consts::TAU * v as f64 / n as f64;
            (a.cos(), a.sin())
        })
        .collect();
    if n < 3 {
        return pos;
    }
    let k = (4.0 / n as f64).sqrt();
    let mut temperature = 0.2;
    for _ in 0..300 {
        let mut disp = vec![(0.0, 0.0); n];
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let (dx, dy) = (pos[u].0 - pos[v].0, pos[u].1 - pos[v].1);
                let d = (dx * dx + dy * dy).sqrt().max(1e-6);
                let mut force = k * k / d;
                if g.has_edge(u, v) {
                    force -= d * d / k;
                }
                disp[u].0 += dx / d * force;
                disp[u].1 += dy / d * force;
            }
        }
        for (p, d) in pos.iter_mut().zip(&disp) {
            let len = (d.0 * d.0 + d.1 * d.1).sqrt().max(1e-9);
            let step = len.min(temperature);
            p.0 += d.0 / len * step;
            p.1 += d.1 / len * step;
        }
        temperature *= 0.985;
    }
    pos
}

fn fit(pos: &mut [(f64, f64)], width: f64, height: f64) {
    let margin = 0.1;
    let (min_x, max_x) = pos.iter().fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.0), b.max(p.0)));
    let (min_y, max_y) = pos.iter().fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.1), b.max(p.1)));
    let span_x = (max_x - min_x).max(1e-9);
    let span_y = (max_y - min_y).max(1e-9);
    let scale = ((1.0 - 2.0 * margin) * width / span_x).min((1.0 - 2.0 * margin) * height / span_y);
    let off_x = (width - scale * span_x) / 2.0;
    let off_y = (height - scale * span_y) / 2.0;
    for p in pos.iter_mut() {
        p.0 = if max_x > min_x { off_x + (p.0 - min_x) * scale } else { width / 2.0 };
        p.1 = if max_y > min_y { off_y + (p.1 - min_y) * scale } else { height / 2.0 };
    }
}
