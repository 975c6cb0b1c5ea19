//! Out-of-process strategies speaking newline-delimited JSON over stdio.

use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, Command, Stdio};
use std::sync::mpsc::{self, Receiver, RecvTimeoutError};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::Candidate;
use crate::error::{Error, Result};

pub const DEFAULT_TIMEOUT_MS: u64 = 2000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExternalSpec {
    pub id: String,
    pub command: Vec<String>,
    #[serde(default = "default_timeout")]
    pub timeout_ms: u64,
}

fn default_timeout() -> u64 {
    DEFAULT_TIMEOUT_MS
}

#[derive(Serialize)]
struct Request<'a> {
    id: u64,
    context: &'a str,
    max_candidates: usize,
}

#[derive(Deserialize)]
struct Response {
    id: u64,
    candidates: Vec<WireCandidate>,
}

#[derive(Deserialize)]
struct WireCandidate {
    text: String,
    #[serde(default)]
    scores: std::collections::BTreeMap<String, f64>,
}

pub struct ExternalStrategy {
    id: String,
    child: Child,
    stdin: Option<ChildStdin>,
    lines: Receiver<String>,
    next_id: u64,
    timeout: Duration,
}

impl ExternalStrategy {
    pub fn spawn(spec: &ExternalSpec) -> Result<Self> {
        let (program, args) = spec
            .command
            .split_first()
            .ok_or_else(|| Error::Config(format!("external strategy {:?} has an empty command", spec.id)))?;
        if spec.id.is_empty() || spec.id.contains('.') {
            return Err(Error::Config(format!("invalid external strategy id {:?}", spec.id)));
        }
        let mut child = Command::new(program)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .map_err(|e| Error::io(program, e))?;
        let stdout = child.stdout.take().expect("piped stdout");
        let stdin = child.stdin.take();
        let (tx, rx) = mpsc::channel();
        std::thread::spawn(move || {
            for line in BufReader::new(stdout).lines() {
                let Ok(line) = line else { break };
                if tx.send(line).is_err() {
                    break;
                }
            }
        });
        Ok(ExternalStrategy {
            id: spec.id.clone(),
            child,
            stdin,
            lines: rx,
            next_id: 0,
            timeout: Duration::from_millis(spec.timeout_ms),
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// Up to `k` candidates. Timeouts and protocol errors are logged and
    /// yield an empty list.
    pub fn query(&mut self, context: &str, k: usize) -> Vec<Candidate> {
        self.next_id += 1;
        let id = self.next_id;
        let request = serde_json::to_string(&Request {
            id,
            context,
            max_candidates: k,
        })
        .expect("request serializes");
        let sent = match self.stdin.as_mut() {
            Some(stdin) => writeln!(stdin, "{request}").and_then(|_| stdin.flush()),
            None => Err(std::io::ErrorKind::BrokenPipe.into()),
        };
        if let Err(e) = sent {
            log::warn!("external strategy {}: write failed: {e}", self.id);
            self.stdin = None;
            return Vec::new();
        }
        let deadline = Instant::now() + self.timeout;
        loop {
            let left = deadline.saturating_duration_since(Instant::now());
            let line = match self.lines.recv_timeout(left) {
                Ok(line) => line,
                Err(RecvTimeoutError::Timeout) => {
                    log::warn!("external strategy {}: request {id} timed out", self.id);
                    return Vec::new();
                }
                Err(RecvTimeoutError::Disconnected) => {
                    log::warn!("external strategy {}: process closed its output", self.id);
                    return Vec::new();
                }
            };
            let response: Response = match serde_json::from_str(&line) {
                Ok(r) => r,
                Err(e) => {
                    log::warn!("external strategy {}: protocol error: {e}", self.id);
                    return Vec::new();
                }
            };
            // late answers to earlier, timed-out requests
            if response.id < id {
                continue;
            }
            if response.id != id {
                log::warn!("external strategy {}: unexpected response id {}", self.id, response.id);
                return Vec::new();
            }
            return response
                .candidates
                .into_iter()
                .filter(|c| !c.text.is_empty())
                .take(k)
                .enumerate()
                .map(|(i, c)| {
                    let mut cand = Candidate::new(c.text, &self.id, i + 1);
                    for (dim, v) in c.scores {
                        cand = cand.with_score(&format!("{}.{dim}", self.id), v);
                    }
                    cand
                })
                .collect();
        }
    }
}

impl Drop for ExternalStrategy {
    fn drop(&mut self) {
        self.stdin = None;
        let _ = self.child.kill();
        let _ = self.child.wait();
    }
}
