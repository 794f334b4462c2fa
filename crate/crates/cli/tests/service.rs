use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use litgame_cli::api::{Api, AnalyzeRequest, ClassifyRequest, ErrorKind, GenerateQuery, GraphInput, HintRequest, MoveRequest};
use litgame_cli::server::router;
use litgame_core::classifier::{OrbitClass, Verdict};
use serde_json::{json, Value};
use tower::ServiceExt;

const EXAMPLE: &str = "6 10\n0 1\n0 2\n0 4\n1 2\n1 3\n1 4\n2 5\n3 4\n3 5\n4 5";

async fn call(method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let body = body.map_or(Body::empty(), |b| Body::from(b.to_string()));
    let req = Request::builder().method(method).uri(uri).header("content-type", "application/json").body(body).unwrap();
    let resp = router(Api::default()).oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap_or(Value::Null))
}

async fn post(uri: &str, body: Value) -> (StatusCode, Value) {
    call("POST", uri, Some(body)).await
}

#[tokio::test]
async fn analyze_grid() {
    let (_, graph) = call("GET", "/api/v1/generate?kind=grid&params=2,3", None).await;
    let (status, v) = post("/api/v1/analyze", json!({ "graph": graph })).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["report"]["nondegenerate"], true);
    assert_eq!(v["report"]["one_lit"], true);
}

#[tokio::test]
async fn both_prefixes_serve_the_same_routes() {
    let a = post("/api/analyze", json!({ "graph": EXAMPLE })).await;
    let b = post("/api/v1/analyze", json!({ "graph": EXAMPLE })).await;
    assert_eq!(a, b);
    assert_eq!(a.1["report"]["min_light"], 2);
    assert_eq!(a.1["report"]["orbit_sizes"]["group_order"], "51840");
}

#[tokio::test]
async fn schema_errors_are_400() {
    let (status, v) = post("/api/analyze", json!({ "grahp": EXAMPLE })).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["error"], "schema");
    let (status, _) = post("/api/analyze", json!({ "graph": "3 1\n0 1" })).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = post("/api/move", json!({ "graph": EXAMPLE, "config": "101", "vertex": 0 })).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = post("/api/move", json!({ "graph": EXAMPLE, "config": "100000", "vertex": 9 })).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call("GET", "/api/generate?kind=blob&params=3", None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call("GET", "/api/generate?params=3", None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let req = Request::builder().method("POST").uri("/api/hint").body(Body::from("not json")).unwrap();
    assert_eq!(router(Api::default()).oneshot(req).await.unwrap().status(), StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn precondition_and_cap_errors_are_422() {
    let (status, v) = post("/api/classify", json!({ "graph": "4 3\n0 1\n0 2\n0 3", "config": "1000" })).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["error"], "precondition");
    assert_eq!(v["verdict"], "degenerate_out_of_scope");
    let (status, v) = post("/api/classify", json!({ "graph": "4 3\n0 1\n1 2\n2 3", "config": "1000" })).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["verdict"], "line_graph_out_of_scope");

    let (_, big) = call("GET", "/api/generate?kind=grid&params=5,5", None).await;
    let (status, v) = post("/api/hint", json!({ "graph": big, "config": "1" })).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["error"], "cap_exceeded");
    let (status, _) = call("GET", "/api/generate?kind=cycle&params=2", None).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn off_vertex_move_is_illegal_and_harmless() {
    let (status, v) = post("/api/move", json!({ "graph": EXAMPLE, "config": "100000", "vertex": 3 })).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["legal"], false);
    assert_eq!(v["config"], "100000");
    assert_eq!(v["orbit_class"], "Q0");
}

#[tokio::test]
async fn move_toggles_neighbours() {
    let (_, v) = post("/api/move", json!({ "graph": EXAMPLE, "config": "0", "vertex": 0 })).await;
    assert_eq!(v["config"], "111010");
    assert_eq!(v["legal"], true);
    assert_eq!(v["weight"], 4);
}

#[tokio::test]
async fn generate_returns_graph_json() {
    let (status, v) = call("GET", "/api/generate?kind=tree&params=7&seed=3", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["n"], 7);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn moves_never_change_orbit_class() {
    let api = Api::default();
    let graph = GraphInput::Text(EXAMPLE.into());
    let class = |config: &str| {
        api.classify(&ClassifyRequest { graph: graph.clone(), config: config.into() }).unwrap().orbit_class
    };
    for bits in 1u64..64 {
        let config: String = (0..6).map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect();
        let start = class(&config);
        for vertex in 0..6 {
            let resp = api.make_move(&MoveRequest { graph: graph.clone(), config: config.clone(), vertex }).unwrap();
            assert_eq!(resp.orbit_class, Some(start));
            assert_eq!(resp.verdict, Verdict::Classified);
        }
    }
}

#[test]
fn hints_strictly_decrease_distance() {
    let api = Api::default();
    let graph = GraphInput::Text(EXAMPLE.into());
    for bits in 1u64..64 {
        let start: String = (0..6).map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect();
        let class = api.classify(&ClassifyRequest { graph: graph.clone(), config: start.clone() }).unwrap().orbit_class;
        let mut config = start;
        let mut last = u32::MAX;
        loop {
            let hint = api.hint(&HintRequest { graph: graph.clone(), config: config.clone() }).unwrap();
            assert!(hint.distance < last);
            last = hint.distance;
            let Some(vertex) = hint.vertex else {
                assert!(hint.already_minimal);
                break;
            };
            let resp = api.make_move(&MoveRequest { graph: graph.clone(), config: config.clone(), vertex }).unwrap();
            assert!(resp.legal);
            assert_eq!(resp.orbit_class, Some(class));
            config = resp.config;
        }
        // Every dual vector has Q = 0, so Q0 orbits reach a single vertex and Q1 orbits stop at two.
        let expected = if class == OrbitClass::Q1 { 2 } else { 1 };
        assert_eq!(config.matches('1').count(), expected);
    }
}

#[test]
fn hint_on_example_pair_and_k2() {
    let api = Api::default();
    let hint = api.hint(&HintRequest { graph: GraphInput::Text(EXAMPLE.into()), config: "0,1".into() }).unwrap();
    assert!(hint.already_minimal);
    assert_eq!(hint.target_weight, 2);
    let k2 = GraphInput::Text("2 1\n0 1".into());
    let hint = api.hint(&HintRequest { graph: k2.clone(), config: "11".into() }).unwrap();
    assert_eq!((hint.vertex, hint.target_weight, hint.distance), (Some(0), 1, 1));
}

#[test]
fn handler_errors_carry_kinds() {
    let api = Api { cap: 4 };
    let err = api.hint(&HintRequest { graph: GraphInput::Text(EXAMPLE.into()), config: "1".into() }).unwrap_err();
    assert_eq!((err.error, err.status()), (ErrorKind::CapExceeded, 422));
    let err = api.generate(&GenerateQuery { kind: "path".into(), params: Some("x".into()), seed: None }).unwrap_err();
    assert_eq!(err.status(), 400);
    let resp = api.analyze(&AnalyzeRequest { graph: GraphInput::Text("2 1\n0 1".into()) }).unwrap();
    assert_eq!(resp.report.verdict, Verdict::LineGraphOutOfScope);
}
