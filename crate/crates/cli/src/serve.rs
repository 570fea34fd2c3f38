use std::net::{Ipv4Addr, SocketAddr};
use std::path::Path;

use axum::http::header::CONTENT_TYPE;
use axum::routing::get;
use axum::Router;
use somson::bundle::MapBundle;
use tower_http::services::ServeDir;

use crate::Failure;

/// Serves `assets` as static files and the bundle bytes at `/bundle` until
/// SIGINT or SIGTERM.
pub fn run(bundle: &Path, assets: &Path, port: u16) -> Result<(), Failure> {
    let bytes =
        std::fs::read(bundle).map_err(|e| Failure::Io(format!("{}: {e}", bundle.display())))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|e| Failure::Data(format!("{}: {e}", bundle.display())))?;
    MapBundle::from_json(text).map_err(|e| Failure::Data(format!("{}: {e}", bundle.display())))?;
    if !assets.is_dir() {
        return Err(Failure::Io(format!(
            "{}: assets directory not found",
            assets.display()
        )));
    }

    let runtime = tokio::runtime::Runtime::new().map_err(|e| Failure::Io(e.to_string()))?;
    runtime.block_on(async {
        let addr = SocketAddr::from((Ipv4Addr::LOCALHOST, port));
        let listener = tokio::net::TcpListener::bind(addr)
            .await
            .map_err(|e| Failure::Io(format!("cannot listen on {addr}: {e}")))?;
        let local = listener
            .local_addr()
            .map_err(|e| Failure::Io(e.to_string()))?;
        let app = router(bytes, assets);
        println!("listening on http://{local}");
        axum::serve(listener, app)
            .with_graceful_shutdown(shutdown())
            .await
            .map_err(|e| Failure::Io(e.to_string()))
    })
}

fn router(bundle: Vec<u8>, assets: &Path) -> Router {
    Router::new()
        .route(
            "/bundle",
            get(move || {
                let body = bundle.clone();
                async move { ([(CONTENT_TYPE, "application/json")], body) }
            }),
        )
        .fallback_service(ServeDir::new(assets))
}

async fn shutdown() {
    let interrupt = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    #[cfg(unix)]
    let terminate = async {
        use tokio::signal::unix::{signal, SignalKind};
        match signal(SignalKind::terminate()) {
            Ok(mut s) => {
                s.recv().await;
            }
            Err(_) => std::future::pending().await,
        }
    };
    #[cfg(not(unix))]
    let terminate = std::future::pending::<()>();
    tokio::select! {
        _ = interrupt => {}
        _ = terminate => {}
    }
}
