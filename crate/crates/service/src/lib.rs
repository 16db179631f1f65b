//! Stateless HTTP/JSON front end for the solver.
//!
//! Every handler recomputes from the posted board; the client owns the game
//! state. Three endpoints:
//!
//! - `POST /solve` value and one optimal strategy
//! - `POST /apply` play one move, or explain why it is illegal
//! - `POST /hint`  first move of an optimal strategy

use axum::extract::rejection::JsonRejection;
use axum::extract::FromRequest;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::post;
use axum::Router;
use clobber_core::{solve, BoardError, Conformation, Direction, Move, Topology};
use serde::{Deserialize, Serialize};
use tower_http::cors::CorsLayer;

pub const DEFAULT_HOST: &str = "127.0.0.1";
pub const DEFAULT_PORT: u16 = 8715;

fn default_topology() -> Topology {
    Topology::Line
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiPosition {
    pub board: String,
    #[serde(default = "default_topology")]
    pub topology: Topology,
}

impl ApiPosition {
    pub fn new(board: impl Into<String>, topology: Topology) -> ApiPosition {
        ApiPosition {
            board: board.into(),
            topology,
        }
    }

    fn conformation(&self) -> Result<Conformation, ApiError> {
        Conformation::parse(&self.board, self.topology).map_err(ApiError::from)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApplyRequest {
    #[serde(flatten)]
    pub position: ApiPosition,
    pub from: usize,
    pub dir: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResponse {
    pub value: usize,
    pub strategy: Vec<Move>,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApplyResponse {
    pub board: String,
    pub legal: bool,
    pub pawns: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HintResponse {
    #[serde(rename = "move")]
    pub mv: Move,
    pub value_now: usize,
    pub value_after: usize,
}

/// Error body: `{"error": code, "message": text}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: String,
    pub message: String,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> ApiError {
        ApiError {
            status,
            code,
            message: message.into(),
        }
    }
}

impl From<BoardError> for ApiError {
    fn from(e: BoardError) -> ApiError {
        match e {
            BoardError::CycleTooShort { .. } => ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, "cycle_too_short", e.to_string()),
            _ => ApiError::new(StatusCode::BAD_REQUEST, "malformed_board", e.to_string()),
        }
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> ApiError {
        ApiError::new(StatusCode::BAD_REQUEST, "malformed_request", e.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody {
            error: self.code.to_string(),
            message: self.message,
        };
        (self.status, axum::Json(body)).into_response()
    }
}

/// `Json` extractor whose every rejection is a 400 with an [`ErrorBody`].
#[derive(Debug, FromRequest)]
#[from_request(via(axum::Json), rejection(ApiError))]
pub struct Json<T>(pub T);

impl<T: Serialize> IntoResponse for Json<T> {
    fn into_response(self) -> Response {
        axum::Json(self.0).into_response()
    }
}

pub async fn solve_handler(Json(req): Json<ApiPosition>) -> Result<Json<SolveResponse>, ApiError> {
    let c = req.conformation()?;
    let r = solve(&c);
    Ok(Json(SolveResponse {
        value: r.value,
        strategy: r.strategy.0,
        n: c.len(),
    }))
}

pub async fn apply_handler(Json(req): Json<ApplyRequest>) -> Result<Json<ApplyResponse>, ApiError> {
    let c = req.position.conformation()?;
    let response = match c.apply(Move::new(req.from, req.dir)) {
        Ok(next) => ApplyResponse {
            board: next.render(),
            legal: true,
            pawns: next.pawn_count(),
            reason: None,
        },
        Err(e) => ApplyResponse {
            board: c.render(),
            legal: false,
            pawns: c.pawn_count(),
            reason: Some(e.reason().to_string()),
        },
    };
    Ok(Json(response))
}

pub async fn hint_handler(Json(req): Json<ApiPosition>) -> Result<Json<HintResponse>, ApiError> {
    let c = req.conformation()?;
    let r = solve(&c);
    let Some(&mv) = r.strategy.moves().first() else {
        return Err(ApiError::new(StatusCode::CONFLICT, "no_legal_moves", "position is terminal"));
    };
    let after = c.apply(mv).expect("solver strategies are legal");
    Ok(Json(HintResponse {
        mv,
        value_now: r.value,
        value_after: solve(&after).value,
    }))
}

pub fn router(dev_cors: bool) -> Router {
    let app = Router::new()
        .route("/solve", post(solve_handler))
        .route("/apply", post(apply_handler))
        .route("/hint", post(hint_handler));
    if dev_cors {
        app.layer(CorsLayer::permissive())
    } else {
        app
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn board_errors_map_to_status() {
        let short = ApiPosition::new("xo", Topology::Cycle).conformation().unwrap_err();
        assert_eq!(short.status, StatusCode::UNPROCESSABLE_ENTITY);
        let bad = ApiPosition::new("x?", Topology::Line).conformation().unwrap_err();
        assert_eq!((bad.status, bad.code), (StatusCode::BAD_REQUEST, "malformed_board"));
    }

    #[test]
    fn topology_defaults_to_line() {
        let p: ApiPosition = serde_json::from_str(r#"{"board":"xo"}"#).unwrap();
        assert_eq!(p, ApiPosition::new("xo", Topology::Line));
    }
}
