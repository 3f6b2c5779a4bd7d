use std::io::Write;
use std::sync::Arc;

use super::{fail, open, ServeArgs, EXIT_DOMAIN, EXIT_ENVIRONMENT, EXIT_OK};
use crate::service;

pub(super) fn cmd_serve(args: &ServeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    // the gallery must load before anything binds
    let bench = match open(&args.gallery) {
        Ok(b) => Arc::new(b),
        Err(e) => return fail(&e, err),
    };
    let runtime = match tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
    {
        Ok(rt) => rt,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start runtime: {e}");
            return EXIT_ENVIRONMENT;
        }
    };

    runtime.block_on(async {
        let listener = match tokio::net::TcpListener::bind((args.host.as_str(), args.port)).await {
            Ok(l) => l,
            Err(e) => {
                let _ = writeln!(err, "error: cannot bind {}:{}: {e}", args.host, args.port);
                return EXIT_DOMAIN;
            }
        };
        if let Ok(addr) = listener.local_addr() {
            let _ = writeln!(out, "listening on http://{addr}");
            let _ = out.flush();
        }
        let app = service::router(bench, args.static_dir.as_deref());
        match axum::serve(listener, app)
            .with_graceful_shutdown(shutdown_signal())
            .await
        {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: server failed: {e}");
                EXIT_ENVIRONMENT
            }
        }
    })
}

async fn shutdown_signal() {
    let ctrl_c = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    #[cfg(unix)]
    let terminate = async {
        match tokio::signal::unix::signal(tokio::signal::unix::SignalKind::terminate()) {
            Ok(mut s) => {
                s.recv().await;
            }
            Err(_) => std::future::pending::<()>().await,
        }
    };
    #[cfg(not(unix))]
    let terminate = std::future::pending::<()>();

    tokio::select! {
        _ = ctrl_c => {},
        _ = terminate => {},
    }
}
