//! The `b`-dependent block-diagonal stage.
//!
//! Each block entry is a signed sum of `b` coefficients. Before the stage
//! runs, every entry is built once from `b` ("precompute"), reusing named
//! two-term sums wherever an entry splits into two of them. Entries of
//! blocks marked `half` are then halved, so the per-product work ("apply")
//! is only the block products themselves.

use crate::exactnum::Ring;
use crate::linalg::Mat;

use super::assets::AssetLines;
use super::FastMultError;

/// Signed `b` indices, sorted by index, no repeats.
pub type Terms = Vec<(i8, usize)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedSum {
    pub name: String,
    pub terms: Terms,
}

/// How an entry is built from `b` and the shared sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recipe {
    /// `±b_m`.
    Single(i8, usize),
    /// `±shared[id]`.
    Shared(i8, usize),
    /// `±shared[i] ± shared[j]`.
    Pair((i8, usize), (i8, usize)),
    /// Summed term by term.
    Chain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub terms: Terms,
    pub recipe: Recipe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub size: usize,
    pub half: bool,
    /// Row-major, `size * size` entries.
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDiagSpec {
    dim: usize,
    shared: Vec<SharedSum>,
    blocks: Vec<Block>,
}

/// Precomputed entries, one row-major vector per block, halving applied.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockValues<S> {
    pub blocks: Vec<Vec<S>>,
}

impl<S: Ring> BlockValues<S> {
    pub fn flat(&self) -> impl Iterator<Item = &S> {
        self.blocks.iter().flatten()
    }
}

fn parse_terms(a: &AssetLines, line: usize, s: &str) -> Result<Terms, FastMultError> {
    let mut terms: Terms = s
        .split_whitespace()
        .map(|t| {
            let (sign, digits) = match t.as_bytes().first() {
                Some(b'-') => (-1, &t[1..]),
                Some(b'+') => (1, &t[1..]),
                _ => (1, t),
            };
            match digits.parse::<usize>() {
                Ok(m) if m < 16 => Ok((sign, m)),
                _ => Err(a.err(line, format!("bad b index {t:?}"))),
            }
        })
        .collect::<Result<_, _>>()?;
    if terms.is_empty() {
        return Err(a.err(line, "empty entry"));
    }
    terms.sort_by_key(|&(_, m)| m);
    if terms.windows(2).any(|w| w[0].1 == w[1].1) {
        return Err(a.err(line, format!("repeated b index in {s:?}")));
    }
    Ok(terms)
}

/// `Some(sign)` if `part` equals `sign ·` the restriction of `whole`.
fn signed_match(part: &Terms, whole: &Terms) -> Option<i8> {
    let mut sign = None;
    for &(s, m) in part {
        let &(ws, _) = whole.iter().find(|&&(_, wm)| wm == m)?;
        let rel = s * ws;
        if *sign.get_or_insert(rel) != rel {
            return None;
        }
    }
    sign
}

fn find_recipe(terms: &Terms, shared: &[SharedSum]) -> Recipe {
    if let [(s, m)] = terms[..] {
        return Recipe::Single(s, m);
    }
    for (id, sh) in shared.iter().enumerate() {
        if sh.terms.len() == terms.len() {
            if let Some(s) = signed_match(&sh.terms, terms) {
                return Recipe::Shared(s, id);
            }
        }
    }
    for (i, x) in shared.iter().enumerate() {
        let Some(si) = signed_match(&x.terms, terms) else {
            continue;
        };
        for (j, y) in shared.iter().enumerate().skip(i + 1) {
            if x.terms.len() + y.terms.len() != terms.len()
                || y.terms.iter().any(|&(_, m)| x.terms.iter().any(|&(_, n)| n == m))
            {
                continue;
            }
            if let Some(sj) = signed_match(&y.terms, terms) {
                return Recipe::Pair((si, i), (sj, j));
            }
        }
    }
    Recipe::Chain
}

/// `±name` or `±name ± name` over the shared sums declared so far.
fn parse_recipe(a: &AssetLines, line: usize, s: &str, shared: &[SharedSum]) -> Result<Recipe, FastMultError> {
    let mut toks = Vec::new();
    let mut sign = 1i8;
    for t in s.split_whitespace() {
        let name = match t {
            "+" => continue,
            "-" => {
                sign = -sign;
                continue;
            }
            _ => t,
        };
        let (sg, name) = match name.strip_prefix('-') {
            Some(rest) => (-sign, rest),
            None => (sign, name.strip_prefix('+').unwrap_or(name)),
        };
        let id = shared
            .iter()
            .position(|x| x.name == name)
            .ok_or_else(|| a.err(line, format!("unknown shared sum {name:?}")))?;
        toks.push((sg, id));
        sign = 1;
    }
    match toks[..] {
        [x] => Ok(Recipe::Shared(x.0, x.1)),
        [x, y] => Ok(Recipe::Pair(x, y)),
        _ => Err(a.err(line, format!("recipe {s:?} must name one or two shared sums"))),
    }
}

/// The terms a recipe produces (for checking explicit recipes).
fn recipe_terms(r: Recipe, terms: &Terms, shared: &[SharedSum]) -> Terms {
    let scaled = |s: i8, id: usize| shared[id].terms.iter().map(move |&(t, m)| (s * t, m));
    let mut out: Terms = match r {
        Recipe::Single(s, m) => vec![(s, m)],
        Recipe::Shared(s, id) => scaled(s, id).collect(),
        Recipe::Pair((si, i), (sj, j)) => scaled(si, i).chain(scaled(sj, j)).collect(),
        Recipe::Chain => terms.clone(),
    };
    out.sort_by_key(|&(_, m)| m);
    out
}

fn signed<S: Ring>(s: i8, x: S) -> S {
    if s < 0 {
        -x
    } else {
        x
    }
}

fn chain<S: Ring>(terms: &Terms, b: &[S]) -> S {
    let mut it = terms.iter();
    let &(s, m) = it.next().expect("entries are non-empty");
    it.fold(signed(s, b[m].clone()), |acc, &(s, m)| {
        if s < 0 {
            acc - b[m].clone()
        } else {
            acc + b[m].clone()
        }
    })
}

/// A block as read: line, name, size, halved flag, entries with optional recipes.
type RawBlock = (usize, String, usize, bool, Vec<(Terms, Option<Recipe>)>);

impl BlockDiagSpec {
    pub(crate) fn parse(a: &AssetLines) -> Result<Self, FastMultError> {
        let mut dim = None;
        let mut shared: Vec<SharedSum> = Vec::new();
        let mut raw: Vec<RawBlock> = Vec::new();
        for &(n, line) in &a.lines {
            let (head, rest) = line.split_once(' ').unwrap_or((line, ""));
            match head {
                "dim" => dim = Some(rest.trim().parse::<usize>().map_err(|_| a.err(n, "bad dim"))?),
                "shared" => {
                    let (name, terms) = rest.trim().split_once(' ').ok_or_else(|| a.err(n, "shared needs a name and terms"))?;
                    if shared.iter().any(|s| s.name == name) {
                        return Err(a.err(n, format!("duplicate shared sum {name}")));
                    }
                    shared.push(SharedSum {
                        name: name.to_string(),
                        terms: parse_terms(a, n, terms)?,
                    });
                }
                "block" => {
                    let t: Vec<&str> = rest.split_whitespace().collect();
                    let [name, size, flag] = t[..] else {
                        return Err(a.err(n, "expected `block NAME SIZE half|full`"));
                    };
                    let size: usize = size.parse().map_err(|_| a.err(n, "bad block size"))?;
                    let half = match flag {
                        "half" => true,
                        "full" => false,
                        _ => return Err(a.err(n, format!("expected half or full, got {flag:?}"))),
                    };
                    raw.push((n, name.to_string(), size, half, Vec::new()));
                }
                "row" => {
                    let block = raw.last_mut().ok_or_else(|| a.err(n, "row before any block"))?;
                    let entries = rest
                        .split(',')
                        .map(|e| match e.split_once('=') {
                            None => Ok((parse_terms(a, n, e)?, None)),
                            Some((t, r)) => Ok((parse_terms(a, n, t)?, Some(parse_recipe(a, n, r, &shared)?))),
                        })
                        .collect::<Result<Vec<_>, FastMultError>>()?;
                    if entries.len() != block.2 {
                        return Err(a.err(n, format!("block {} needs {} entries per row", block.1, block.2)));
                    }
                    block.4.extend(entries);
                }
                other => return Err(a.err(n, format!("unknown directive {other:?}"))),
            }
        }
        let dim = dim.ok_or_else(|| a.err(0, "missing dim"))?;
        let mut blocks = Vec::new();
        for (n, name, size, half, entries) in raw {
            if entries.len() != size * size {
                return Err(a.err(n, format!("block {name} has {} entries, needs {}", entries.len(), size * size)));
            }
            let entries = entries
                .into_iter()
                .map(|(terms, given)| match given {
                    Some(r) if recipe_terms(r, &terms, &shared) == terms => Ok(Entry { recipe: r, terms }),
                    Some(_) => Err(a.err(n, format!("block {name}: recipe does not sum to {terms:?}"))),
                    None => Ok(Entry {
                        recipe: find_recipe(&terms, &shared),
                        terms,
                    }),
                })
                .collect::<Result<_, _>>()?;
            blocks.push(Block {
                name,
                size,
                half,
                entries,
            });
        }
        let covered: usize = blocks.iter().map(|b| b.size).sum();
        if covered != dim {
            return Err(a.err(0, format!("blocks cover {covered} of dim {dim}")));
        }
        Ok(Self { dim, shared, blocks })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn shared(&self) -> &[SharedSum] {
        &self.shared
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    pub fn entry_count(&self) -> usize {
        self.blocks.iter().map(|b| b.entries.len()).sum()
    }

    /// Builds all entries. Shared sums are computed on first use, in block
    /// order; `hook(i)` runs after block `i` is complete.
    pub fn precompute_hooked<S: Ring>(&self, b: &[S], halve: bool, hook: &mut dyn FnMut(usize)) -> BlockValues<S> {
        let mut shared: Vec<Option<S>> = vec![None; self.shared.len()];
        let mut get = |id: usize, b: &[S]| -> S {
            shared[id].get_or_insert_with(|| chain(&self.shared[id].terms, b)).clone()
        };
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (bi, block) in self.blocks.iter().enumerate() {
            let vals = block
                .entries
                .iter()
                .map(|e| {
                    let v = match e.recipe {
                        Recipe::Single(s, m) => signed(s, b[m].clone()),
                        Recipe::Shared(s, id) => signed(s, get(id, b)),
                        Recipe::Pair((si, i), (sj, j)) => {
                            let (x, y) = (get(i, b), get(j, b));
                            match (si > 0, sj > 0) {
                                (true, true) => x + y,
                                (true, false) => x - y,
                                (false, true) => y - x,
                                (false, false) => -(x + y),
                            }
                        }
                        Recipe::Chain => chain(&e.terms, b),
                    };
                    if halve && block.half {
                        v.halve()
                    } else {
                        v
                    }
                })
                .collect();
            blocks.push(vals);
            hook(bi);
        }
        BlockValues { blocks }
    }

    pub fn precompute<S: Ring>(&self, b: &[S]) -> BlockValues<S> {
        self.precompute_hooked(b, true, &mut |_| {})
    }

    /// The blocks as matrices, without the ½ factors.
    pub fn block_matrices<S: Ring>(&self, b: &[S]) -> Vec<Mat<S>> {
        let vals = self.precompute_hooked(b, false, &mut |_| {});
        self.blocks
            .iter()
            .zip(vals.blocks)
            .map(|(blk, v)| Mat::new(blk.size, blk.size, v).expect("square block"))
            .collect()
    }

    /// Wraps externally supplied entries (row-major, block order).
    pub fn values_from_flat<S: Ring>(&self, flat: Vec<S>) -> Result<BlockValues<S>, FastMultError> {
        if flat.len() != self.entry_count() {
            return Err(FastMultError::Dim(format!(
                "{} block entries supplied, {} needed",
                flat.len(),
                self.entry_count()
            )));
        }
        let mut it = flat.into_iter();
        Ok(BlockValues {
            blocks: self
                .blocks
                .iter()
                .map(|b| it.by_ref().take(b.entries.len()).collect())
                .collect(),
        })
    }

    /// Block products `y_i = Σ_j e_ij x_j`; `hook(i)` after block `i`.
    pub fn apply_hooked<S: Ring>(&self, vals: &BlockValues<S>, x: &[S], hook: &mut dyn FnMut(usize)) -> Vec<S> {
        assert_eq!(x.len(), self.dim, "block-diagonal input length");
        let mut out = Vec::with_capacity(self.dim);
        let mut off = 0;
        for (bi, (block, v)) in self.blocks.iter().zip(&vals.blocks).enumerate() {
            let n = block.size;
            for i in 0..n {
                let y = (1..n).fold(v[i * n].clone() * x[off].clone(), |acc, j| {
                    acc + v[i * n + j].clone() * x[off + j].clone()
                });
                out.push(y);
            }
            off += n;
            hook(bi);
        }
        out
    }

    pub fn apply<S: Ring>(&self, vals: &BlockValues<S>, x: &[S]) -> Vec<S> {
        self.apply_hooked(vals, x, &mut |_| {})
    }

    /// The stage as a dense matrix, ½ factors included.
    pub fn to_matrix<S: Ring>(&self, vals: &BlockValues<S>) -> Mat<S> {
        let mut m = Mat::zeros(self.dim, self.dim);
        let mut off = 0;
        for (block, v) in self.blocks.iter().zip(&vals.blocks) {
            let n = block.size;
            for i in 0..n {
                for j in 0..n {
                    m.set(off + i, off + j, v[i * n + j].clone());
                }
            }
            off += n;
        }
        m
    }
}
