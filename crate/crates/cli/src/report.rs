use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A failed command. Usage problems exit with 2, bad data or parameters
/// outside a formula's domain with 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Data(String),
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Failure::Data(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Data(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) => m,
        }
    }
}

impl From<entropy_modes::Error> for Failure {
    fn from(e: entropy_modes::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

pub type CmdResult<T = ()> = std::result::Result<T, Failure>;

#[derive(Debug, Clone, Serialize)]
pub struct RngInfo {
    pub algorithm: &'static str,
    pub version: &'static str,
    pub seed: u64,
    /// Stream indices used, one per replica chain.
    pub streams: u64,
}

#[derive(Debug, Serialize)]
pub struct Report<'a, P: Serialize, R: Serialize> {
    pub command: &'static str,
    pub version: &'static str,
    pub params: &'a P,
    pub input_digest: String,
    pub results: R,
    pub rng: Option<RngInfo>,
}

impl<'a, P: Serialize, R: Serialize> Report<'a, P, R> {
    /// A report whose digest covers `input`, or the parameter echo when the
    /// command read no input.
    pub fn new(command: &'static str, params: &'a P, input: Option<&[u8]>, results: R) -> Self {
        let input_digest = match input {
            Some(bytes) => sha256(bytes),
            None => sha256(&serde_json::to_vec(params).expect("parameters serialize")),
        };
        Self {
            command,
            version: VERSION,
            params,
            input_digest,
            results,
            rng: None,
        }
    }

    pub fn with_rng(mut self, rng: RngInfo) -> Self {
        self.rng = Some(rng);
        self
    }

    pub fn print(&self) -> CmdResult {
        let mut text = serde_json::to_string_pretty(self)
            .map_err(|e| Failure::data(format!("cannot encode report: {e}")))?;
        text.push('\n');
        let stdout = io::stdout();
        let mut out = stdout.lock();
        out.write_all(text.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| Failure::data(format!("cannot write report: {e}")))
    }
}

pub fn sha256(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

/// Reads a whole file, or stdin for `-`.
pub fn read_input(path: &Path) -> CmdResult<Vec<u8>> {
    if is_stdio(path) {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::data(format!("cannot read stdin: {e}")))?;
        return Ok(buf);
    }
    fs::read(path).map_err(|e| Failure::data(format!("cannot read {}: {e}", path.display())))
}

/// Writes `text` to a file, or stdout for `-`.
pub fn write_output(path: &Path, text: &str) -> CmdResult {
    let result = if is_stdio(path) {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        out.write_all(text.as_bytes()).and_then(|_| out.flush())
    } else {
        fs::write(path, text)
    };
    result.map_err(|e| Failure::data(format!("cannot write {}: {e}", path.display())))
}

pub fn warn(msg: &str) {
    eprintln!("warning: {msg}");
}

/// Parses `a,b` into two numbers.
pub fn parse_pair(text: &str, flag: &str) -> CmdResult<(f64, f64)> {
    let bad = || {
        Failure::usage(format!(
            "{flag} expects two comma-separated numbers, got '{text}'"
        ))
    };
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse::<f64>().map_err(|_| bad())?;
    let b = b.trim().parse::<f64>().map_err(|_| bad())?;
    Ok((a, b))
}
