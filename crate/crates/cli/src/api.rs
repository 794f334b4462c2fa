//! Request and response types of the JSON service, with the handlers as
//! plain functions so they can be called without a server.

use litgame_core::classifier::{classify_graph, ClassReport, ClassifyError, OrbitClass, OrbitClassifier, Verdict};
use litgame_core::game::{apply_move, Configuration, GameError, OrbitDistances, DEFAULT_ORBIT_CAP};
use litgame_core::graph::{generate_graph, parse_graph_any, structural_report, Graph, GraphError, GraphJson, GraphKind, StructuralReport};
use serde::{Deserialize, Serialize};

/// A graph given either as file-format text (or JSON text) or as a JSON object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphInput {
    Text(String),
    Json(GraphJson),
}

impl GraphInput {
    pub fn to_graph(&self) -> Result<Graph, ApiError> {
        match self {
            GraphInput::Text(text) => parse_graph_any(text),
            GraphInput::Json(json) => Graph::try_from(json),
        }
        .map_err(|e| ApiError::schema(format!("graph: {e}")))
    }
}

impl From<&Graph> for GraphInput {
    fn from(g: &Graph) -> Self {
        GraphInput::Json(g.to_json())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalyzeRequest {
    pub graph: GraphInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeResponse {
    pub report: ClassReport,
    pub structure: StructuralReport,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MoveRequest {
    pub graph: GraphInput,
    /// Bitstring or comma-separated on vertices.
    pub config: String,
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveResponse {
    pub config: String,
    /// False when the vertex was off; the configuration is then unchanged.
    pub legal: bool,
    pub weight: u32,
    pub verdict: Verdict,
    /// Present when the graph is classified.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orbit_class: Option<OrbitClass>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HintRequest {
    pub graph: GraphInput,
    pub config: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HintResponse {
    /// Next move of a shortest solving sequence; absent when already minimal.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex: Option<usize>,
    pub target_weight: u32,
    /// Moves remaining along a shortest sequence.
    pub distance: u32,
    pub already_minimal: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassifyRequest {
    pub graph: GraphInput,
    pub config: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyResponse {
    pub orbit_class: OrbitClass,
    pub weight: u32,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct GenerateQuery {
    pub kind: String,
    /// Comma-separated integers.
    #[serde(default)]
    pub params: Option<String>,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    /// Malformed request; HTTP 400.
    Schema,
    /// A result was requested for a graph outside its hypotheses; HTTP 422.
    Precondition,
    /// The graph is larger than the configured orbit cap; HTTP 422.
    CapExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiError {
    pub error: ErrorKind,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<Verdict>,
}

impl ApiError {
    pub fn schema(message: impl Into<String>) -> Self {
        ApiError { error: ErrorKind::Schema, message: message.into(), verdict: None }
    }

    pub fn status(&self) -> u16 {
        match self.error {
            ErrorKind::Schema => 400,
            ErrorKind::Precondition | ErrorKind::CapExceeded => 422,
        }
    }
}

impl From<GameError> for ApiError {
    fn from(e: GameError) -> Self {
        match e {
            GameError::CapExceeded { .. } => ApiError { error: ErrorKind::CapExceeded, message: e.to_string(), verdict: None },
            _ => ApiError::schema(e.to_string()),
        }
    }
}

impl From<ClassifyError> for ApiError {
    fn from(e: ClassifyError) -> Self {
        match e.verdict() {
            Some(verdict) => ApiError { error: ErrorKind::Precondition, message: e.to_string(), verdict: Some(verdict) },
            None => ApiError::schema(e.to_string()),
        }
    }
}

/// The service's handlers, parameterized by the orbit cap.
#[derive(Debug, Clone, Copy)]
pub struct Api {
    pub cap: usize,
}

impl Default for Api {
    fn default() -> Self {
        Api { cap: DEFAULT_ORBIT_CAP }
    }
}

fn config_for(g: &Graph, text: &str) -> Result<Configuration, ApiError> {
    Configuration::parse(text, g.order(), false).map_err(|e| ApiError::schema(format!("config: {e}")))
}

impl Api {
    pub fn analyze(&self, req: &AnalyzeRequest) -> Result<AnalyzeResponse, ApiError> {
        let g = req.graph.to_graph()?;
        Ok(AnalyzeResponse { report: classify_graph(&g), structure: structural_report(&g) })
    }

    pub fn make_move(&self, req: &MoveRequest) -> Result<MoveResponse, ApiError> {
        let g = req.graph.to_graph()?;
        let f = config_for(&g, &req.config)?;
        let next = apply_move(&g, &f, req.vertex)?;
        let (verdict, orbit_class) = match OrbitClassifier::new(&g) {
            Ok(c) => (Verdict::Classified, Some(c.classify(&next)?)),
            Err(e) => (e.verdict().unwrap_or(Verdict::DegenerateOutOfScope), None),
        };
        Ok(MoveResponse { config: next.to_bitstring(), legal: f.is_on(req.vertex), weight: next.weight(), verdict, orbit_class })
    }

    pub fn hint(&self, req: &HintRequest) -> Result<HintResponse, ApiError> {
        let g = req.graph.to_graph()?;
        let f = config_for(&g, &req.config)?;
        let field = OrbitDistances::new(&g, &f, self.cap)?;
        let distance = field.distance(&f).expect("start lies in its own orbit");
        Ok(HintResponse { vertex: field.hint(&f), target_weight: field.target_weight(), distance, already_minimal: distance == 0 })
    }

    /// Orbit class by the quadratic-form criterion; refused outside its hypotheses.
    pub fn classify(&self, req: &ClassifyRequest) -> Result<ClassifyResponse, ApiError> {
        let g = req.graph.to_graph()?;
        let f = config_for(&g, &req.config)?;
        let class = OrbitClassifier::new(&g)?.classify(&f)?;
        Ok(ClassifyResponse { orbit_class: class, weight: f.weight() })
    }

    pub fn generate(&self, query: &GenerateQuery) -> Result<GraphJson, ApiError> {
        let kind: GraphKind = query.kind.parse().map_err(|e: GraphError| ApiError::schema(e.to_string()))?;
        let params = parse_params(query.params.as_deref().unwrap_or(""))?;
        generate_graph(kind, &params, query.seed).map(|g| g.to_json()).map_err(|e| match e {
            GraphError::BadParameter(_) | GraphError::TooLarge(_) => {
                ApiError { error: ErrorKind::Precondition, message: e.to_string(), verdict: None }
            }
            _ => ApiError::schema(e.to_string()),
        })
    }
}

pub fn parse_params(text: &str) -> Result<Vec<i64>, ApiError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| ApiError::schema(format!("parameter `{s}` is not an integer"))))
        .collect()
}
