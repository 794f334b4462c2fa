//! HTTP routing for [`Api`]. Every route is served under both `/api` and
//! `/api/v1`.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::api::{Api, ApiError, GenerateQuery};

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status()).expect("valid status");
        (status, Json(self)).into_response()
    }
}

/// Decodes the body ourselves so every schema problem is a 400.
fn decode<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::schema(format!("request body: {e}")))
}

fn respond<T: Serialize>(result: Result<T, ApiError>) -> Response {
    match result {
        Ok(body) => Json(body).into_response(),
        Err(e) => e.into_response(),
    }
}

async fn analyze(State(api): State<Arc<Api>>, body: Bytes) -> Response {
    respond(decode(&body).and_then(|req| api.analyze(&req)))
}

async fn make_move(State(api): State<Arc<Api>>, body: Bytes) -> Response {
    respond(decode(&body).and_then(|req| api.make_move(&req)))
}

async fn hint(State(api): State<Arc<Api>>, body: Bytes) -> Response {
    respond(decode(&body).and_then(|req| api.hint(&req)))
}

async fn classify(State(api): State<Arc<Api>>, body: Bytes) -> Response {
    respond(decode(&body).and_then(|req| api.classify(&req)))
}

async fn generate(State(api): State<Arc<Api>>, Query(query): Query<HashMap<String, String>>) -> Response {
    let parsed = (|| {
        let kind = query.get("kind").cloned().ok_or_else(|| ApiError::schema("missing `kind`"))?;
        let seed = match query.get("seed") {
            Some(s) => Some(s.parse().map_err(|_| ApiError::schema(format!("seed `{s}` is not an integer")))?),
            None => None,
        };
        Ok(GenerateQuery { kind, params: query.get("params").cloned(), seed })
    })();
    respond(parsed.and_then(|q| api.generate(&q)))
}

fn routes() -> Router<Arc<Api>> {
    Router::new()
        .route("/analyze", post(analyze))
        .route("/move", post(make_move))
        .route("/hint", post(hint))
        .route("/classify", post(classify))
        .route("/generate", get(generate))
}

pub fn router(api: Api) -> Router {
    Router::new().nest("/api", routes()).nest("/api/v1", routes()).with_state(Arc::new(api))
}

pub async fn serve(api: Api, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(api))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
