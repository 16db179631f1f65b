use std::net::SocketAddr;

use clap::Parser;
use clobber_service::{router, DEFAULT_HOST, DEFAULT_PORT};

/// HTTP/JSON service for solitaire Clobber.
#[derive(Debug, Parser)]
#[command(name = "clobber-service", version)]
struct Args {
    #[arg(long, default_value = DEFAULT_HOST)]
    host: String,
    #[arg(long, default_value_t = DEFAULT_PORT)]
    port: u16,
    /// Send permissive cross-origin headers (local UI development only).
    #[arg(long)]
    dev_cors: bool,
}

#[tokio::main]
async fn main() -> std::io::Result<()> {
    let args = Args::parse();
    let listener = tokio::net::TcpListener::bind((args.host.as_str(), args.port)).await?;
    let addr: SocketAddr = listener.local_addr()?;
    eprintln!("listening on http://{addr}");
    axum::serve(listener, router(args.dev_cors))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
