use std::io::{Read, Write};
use std::process::{Command, Stdio};
use std::thread;
use std::time::Duration;

use thiserror::Error;
use wait_timeout::ChildExt;

use super::config::{NormalizerKind, NormalizerSpec};

/// Hard limit on one external normalizer invocation.
pub const EXTERNAL_TIMEOUT: Duration = Duration::from_secs(30);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct NormalizeError(pub String);

/// Runs the configured normalizer, then [`canonicalize`].
pub fn normalize(text: &str, spec: &NormalizerSpec) -> Result<String, NormalizeError> {
    let text = unify_line_endings(text.strip_prefix('\u{feff}').unwrap_or(text));
    let normalized = match spec.kind {
        NormalizerKind::BuiltinJson => sort_json(&text)?,
        NormalizerKind::BuiltinWhitespace => strip_trailing_whitespace(&text),
        NormalizerKind::ExternalCommand => {
            let command = spec
                .command
                .as_deref()
                .ok_or_else(|| NormalizeError("external_command without a command".into()))?;
            run_external(&text, command, EXTERNAL_TIMEOUT)?
        }
        NormalizerKind::None => text,
    };
    Ok(canonicalize(&normalized))
}

/// LF line endings and exactly one trailing newline. Text that is empty
/// after removing trailing newlines stays empty.
pub fn canonicalize(text: &str) -> String {
    let text = unify_line_endings(text.strip_prefix('\u{feff}').unwrap_or(text));
    let body = text.trim_end_matches('\n');
    if body.is_empty() {
        String::new()
    } else {
        format!("{body}\n")
    }
}

fn unify_line_endings(text: &str) -> String {
    if text.contains('\r') {
        text.replace("\r\n", "\n").replace('\r', "\n")
    } else {
        text.to_string()
    }
}

/// Keys sorted at every depth, two-space indentation.
fn sort_json(text: &str) -> Result<String, NormalizeError> {
    // serde_json's default map is ordered by key
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| NormalizeError(format!("invalid JSON: {e}")))?;
    serde_json::to_string_pretty(&value).map_err(|e| NormalizeError(e.to_string()))
}

fn strip_trailing_whitespace(text: &str) -> String {
    text.split('\n')
        .map(str::trim_end)
        .collect::<Vec<_>>()
        .join("\n")
}

/// Pipes `text` through `command` with only `PATH` in the environment.
pub(crate) fn run_external(
    text: &str,
    command: &str,
    timeout: Duration,
) -> Result<String, NormalizeError> {
    let argv = shlex::split(command)
        .filter(|argv| !argv.is_empty())
        .ok_or_else(|| NormalizeError(format!("cannot parse command `{command}`")))?;

    let mut cmd = Command::new(&argv[0]);
    cmd.args(&argv[1..])
        .env_clear()
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    if let Some(path) = std::env::var_os("PATH") {
        cmd.env("PATH", path);
    }
    let mut child = cmd
        .spawn()
        .map_err(|e| NormalizeError(format!("cannot start `{}`: {e}", argv[0])))?;

    let mut stdin = child.stdin.take().expect("piped stdin");
    let mut stdout = child.stdout.take().expect("piped stdout");
    let mut stderr = child.stderr.take().expect("piped stderr");
    let input = text.as_bytes().to_vec();
    let writer = thread::spawn(move || {
        // a normalizer may exit without draining stdin
        let _ = stdin.write_all(&input);
    });
    let out_reader = thread::spawn(move || {
        let mut buf = Vec::new();
        stdout.read_to_end(&mut buf).map(|_| buf)
    });
    let err_reader = thread::spawn(move || {
        let mut buf = Vec::new();
        let _ = stderr.read_to_end(&mut buf);
        buf
    });

    let status = match child.wait_timeout(timeout) {
        Ok(Some(status)) => status,
        Ok(None) => {
            let _ = child.kill();
            let _ = child.wait();
            return Err(NormalizeError(format!(
                "`{command}` timed out after {}s",
                timeout.as_secs()
            )));
        }
        Err(e) => return Err(NormalizeError(format!("waiting for `{command}`: {e}"))),
    };
    let _ = writer.join();
    let stdout = out_reader
        .join()
        .expect("stdout reader")
        .map_err(|e| NormalizeError(format!("reading output of `{command}`: {e}")))?;
    let stderr = err_reader.join().expect("stderr reader");

    if !status.success() {
        let detail = String::from_utf8_lossy(&stderr);
        return Err(NormalizeError(format!(
            "`{command}` exited with {status}: {}",
            detail.trim()
        )));
    }
    String::from_utf8(stdout)
        .map_err(|_| NormalizeError(format!("`{command}` produced non-UTF-8 output")))
}
