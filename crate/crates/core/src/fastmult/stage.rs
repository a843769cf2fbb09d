//! Pipeline stages.

use crate::exactnum::{DyadicRational, Ring};
use crate::linalg::{dirsum, kron, Mat, SignMatrix, SignedPermutation};

use super::assets::AssetLines;
use super::blockdiag::BlockDiagSpec;
use super::FastMultError;

#[derive(Debug, Clone, PartialEq)]
pub enum StageKind {
    SignedPerm(SignedPermutation),
    Structural { expr: String, matrix: SignMatrix },
    BlockDiag(BlockDiagSpec),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Stage {
    pub name: String,
    pub kind: StageKind,
}

impl Stage {
    pub fn parse(name: &str, text: &str) -> Result<Self, FastMultError> {
        let file = format!("{name}.stage");
        let a = AssetLines::parse(&file, text)?;
        let kind = match a.kind {
            "signed-perm" => StageKind::SignedPerm(parse_signed_perm(&a)?),
            "structural" => parse_structural(&a)?,
            "block-diag" => StageKind::BlockDiag(BlockDiagSpec::parse(&a)?),
            other => return Err(a.err(1, format!("unknown stage kind {other:?}"))),
        };
        Ok(Self {
            name: name.to_string(),
            kind,
        })
    }

    pub fn in_dim(&self) -> usize {
        match &self.kind {
            StageKind::SignedPerm(p) => p.len(),
            StageKind::Structural { matrix, .. } => matrix.cols(),
            StageKind::BlockDiag(d) => d.dim(),
        }
    }

    pub fn out_dim(&self) -> usize {
        match &self.kind {
            StageKind::SignedPerm(p) => p.len(),
            StageKind::Structural { matrix, .. } => matrix.rows(),
            StageKind::BlockDiag(d) => d.dim(),
        }
    }

    pub fn is_block_diag(&self) -> bool {
        matches!(self.kind, StageKind::BlockDiag(_))
    }

    /// Applies a constant stage. Panics on the block-diagonal stage, which
    /// needs precomputed values.
    pub fn apply_const<S: Ring>(&self, x: &[S]) -> Vec<S> {
        match &self.kind {
            StageKind::SignedPerm(p) => p.apply(x),
            StageKind::Structural { matrix, .. } => matrix.apply(x),
            StageKind::BlockDiag(_) => panic!("stage {} depends on b", self.name),
        }
    }

    /// Matrix of a constant stage.
    pub fn const_matrix<S: Ring>(&self) -> Option<Mat<S>> {
        match &self.kind {
            StageKind::SignedPerm(p) => Some(p.to_matrix()),
            StageKind::Structural { matrix, .. } => Some(matrix.to_matrix()),
            StageKind::BlockDiag(_) => None,
        }
    }
}

fn parse_signs(a: &AssetLines, line: usize, toks: &[&str]) -> Result<Vec<i8>, FastMultError> {
    toks.iter()
        .map(|t| match *t {
            "+" => Ok(1),
            "-" => Ok(-1),
            _ => Err(a.err(line, format!("bad sign {t:?}"))),
        })
        .collect()
}

fn parse_signed_perm(a: &AssetLines) -> Result<SignedPermutation, FastMultError> {
    let mut size = None;
    let mut transpose = false;
    let mut blocks = Vec::new();
    for &(n, line) in &a.lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "size" => {
                size = Some(toks.get(1).and_then(|s| s.parse::<usize>().ok()).ok_or_else(|| a.err(n, "bad size"))?)
            }
            "transpose" => transpose = true,
            "block" => {
                let len: usize = toks
                    .get(1)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| a.err(n, "bad block length"))?;
                let (order, rest): (Vec<usize>, &[&str]) = match toks.get(2) {
                    Some(&"identity") => ((1..=len).collect(), &toks[3..]),
                    Some(&"order") if toks.len() >= 3 + len => {
                        let order = toks[3..3 + len]
                            .iter()
                            .map(|t| t.parse().map_err(|_| a.err(n, format!("bad index {t:?}"))))
                            .collect::<Result<_, _>>()?;
                        (order, &toks[3 + len..])
                    }
                    _ => return Err(a.err(n, "expected `order <indices>` or `identity`")),
                };
                let signs = match rest.first() {
                    None => None,
                    Some(&"signs") if rest.len() == 1 + len => Some(parse_signs(a, n, &rest[1..])?),
                    _ => return Err(a.err(n, format!("expected `signs` followed by {len} signs"))),
                };
                let p = SignedPermutation::from_one_based(&order, signs.as_deref())
                    .map_err(|e| a.err(n, e.to_string()))?;
                blocks.push(p);
            }
            other => return Err(a.err(n, format!("unknown directive {other:?}"))),
        }
    }
    let p = SignedPermutation::dirsum(&blocks);
    match size {
        Some(s) if s == p.len() => {}
        Some(s) => return Err(a.err(0, format!("blocks cover {} of size {s}", p.len()))),
        None => return Err(a.err(0, "missing size")),
    }
    Ok(if transpose { p.inverse() } else { p })
}

fn parse_structural(a: &AssetLines) -> Result<StageKind, FastMultError> {
    let mut dims = None;
    let mut expr = None;
    for &(n, line) in &a.lines {
        if let Some(rest) = line.strip_prefix("dims ") {
            let v: Vec<usize> = rest
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| a.err(n, "bad dims")))
                .collect::<Result<_, _>>()?;
            let [r, c] = v[..] else {
                return Err(a.err(n, "dims takes two numbers"));
            };
            dims = Some((n, r, c));
        } else if let Some(rest) = line.strip_prefix("expr ") {
            let m = parse_expr(rest).map_err(|msg| a.err(n, msg))?;
            expr = Some((rest.trim().to_string(), m));
        } else {
            return Err(a.err(n, format!("unknown directive {line:?}")));
        }
    }
    let (expr, m) = expr.ok_or_else(|| a.err(0, "missing expr"))?;
    let (n, r, c) = dims.ok_or_else(|| a.err(0, "missing dims"))?;
    if (m.rows(), m.cols()) != (r, c) {
        return Err(a.err(
            n,
            format!("expression is {}x{}, declared {r}x{c}", m.rows(), m.cols()),
        ));
    }
    let matrix = SignMatrix::from_mat(&m).map_err(|e| a.err(n, e.to_string()))?;
    Ok(StageKind::Structural { expr, matrix })
}

/// Evaluates a `kron`/`dirsum` expression over the atoms.
pub fn parse_expr(s: &str) -> Result<Mat<DyadicRational>, String> {
    let s = s.trim();
    if let Some(open) = s.find('(') {
        let func = s[..open].trim();
        let inner = s[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| format!("unbalanced parentheses in {s:?}"))?;
        let args = split_args(inner)?;
        let mats = args.iter().map(|x| parse_expr(x)).collect::<Result<Vec<_>, _>>()?;
        return match func {
            "kron" => mats
                .into_iter()
                .reduce(|acc, m| kron(&acc, &m))
                .ok_or_else(|| "kron of nothing".to_string()),
            "dirsum" => dirsum(&mats).map_err(|e| e.to_string()),
            _ => Err(format!("unknown function {func:?}")),
        };
    }
    match s {
        "H2" => Ok(Mat::h2()),
        "T23" => Ok(Mat::t23()),
        "T32" => Ok(Mat::t32()),
        _ => match s.strip_prefix('I').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n > 0 => Ok(Mat::identity(n)),
            _ => Err(format!("unknown atom {s:?}")),
        },
    }
}

fn split_args(s: &str) -> Result<Vec<&str>, String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(format!("unbalanced parentheses in {s:?}"));
        }
    }
    if depth != 0 {
        return Err(format!("unbalanced parentheses in {s:?}"));
    }
    out.push(&s[start..]);
    Ok(out)
}
