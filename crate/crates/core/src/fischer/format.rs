//! Text and JSON forms of a triple system. Both use 1-based point labels.
//!
//! ```text
//! points 6
//! 1 2 6
//! 2 3 4
//! ```

use serde::{Deserialize, Serialize};

use super::{PartialTripleSystem, PtsError};

#[derive(Debug, thiserror::Error)]
pub enum PtsFormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Invalid(#[from] PtsError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PtsJson {
    pub points: usize,
    pub lines: Vec<[usize; 3]>,
}

impl PartialTripleSystem {
    pub fn to_text(&self) -> String {
        let mut s = format!("points {}\n", self.n_points());
        for l in self.lines() {
            s.push_str(&format!("{} {} {}\n", l[0] + 1, l[1] + 1, l[2] + 1));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, PtsFormatError> {
        let mut n = None;
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let syntax = |msg: &str| PtsFormatError::Syntax {
                line: lineno,
                msg: msg.to_string(),
            };
            let toks: Vec<&str> = body.split_whitespace().collect();
            match (n, toks.as_slice()) {
                (None, ["points", count]) => n = Some(count.parse::<usize>().map_err(|_| syntax("bad point count"))?),
                (None, _) => return Err(syntax("expected `points N`")),
                (Some(_), [a, b, c]) => {
                    let mut l = [0usize; 3];
                    for (slot, t) in l.iter_mut().zip([a, b, c]) {
                        let p: usize = t.parse().map_err(|_| syntax("bad point index"))?;
                        if p == 0 {
                            return Err(syntax("points are 1-based"));
                        }
                        *slot = p;
                    }
                    lines.push(l);
                }
                (Some(_), _) => return Err(syntax("expected three point indices")),
            }
        }
        let n = n.ok_or(PtsFormatError::Syntax {
            line: 0,
            msg: "missing `points N` header".to_string(),
        })?;
        Ok(Self::from_one_based(n, &lines)?)
    }

    pub fn to_json(&self) -> PtsJson {
        PtsJson {
            points: self.n_points(),
            lines: self.lines().iter().map(|l| l.map(|p| p + 1)).collect(),
        }
    }

    pub fn from_json(j: &PtsJson) -> Result<Self, PtsFormatError> {
        Ok(Self::from_one_based(j.points, &j.lines)?)
    }
}
