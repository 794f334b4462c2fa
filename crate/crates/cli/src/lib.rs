//! Command line front end and HTTP service for `litgame-core`.

pub mod api;
pub mod render;
pub mod server;
