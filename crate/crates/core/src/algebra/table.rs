//! Basis multiplication table.

use std::fmt;

use super::AlgebraError;

pub const DIM: usize = 16;

/// Generator sets of the basis units, bit `g - 1` for `i_g`. Composite
/// units are the ordered products of their generators.
const BLADES: [u8; DIM] = [
    0b0000, 0b0001, 0b0010, 0b0100, 0b1000, // 1, i1..i4
    0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, // i5..i10
    0b0111, 0b1011, 0b1101, 0b1110, 0b1111, // i11..i15
];

/// Squares of the generators: `i1² = 1`, `i2² = i3² = i4² = -1`.
const GENERATOR_SQUARES: [i8; 4] = [1, -1, -1, -1];

/// `±i_index` (index 0 is the real unit).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedBasis {
    sign: i8,
    index: u8,
}

impl SignedBasis {
    pub fn new(sign: i8, index: usize) -> Result<Self, AlgebraError> {
        if sign != 1 && sign != -1 {
            return Err(AlgebraError::BadSign(sign));
        }
        if index >= DIM {
            return Err(AlgebraError::IndexOutOfRange(index));
        }
        Ok(Self {
            sign,
            index: index as u8,
        })
    }

    pub const fn pos(index: u8) -> Self {
        Self { sign: 1, index }
    }

    pub fn sign(self) -> i8 {
        self.sign
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn negated(self) -> Self {
        Self {
            sign: -self.sign,
            index: self.index,
        }
    }
}

/// Token form used by the data assets: `5`, `-5`, `-0`.
impl fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        write!(f, "{}", self.index)
    }
}

impl std::str::FromStr for SignedBasis {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (sign, digits) = match s.as_bytes().first() {
            Some(b'-') => (-1, &s[1..]),
            Some(b'+') => (1, &s[1..]),
            _ => (1, s),
        };
        let index: usize = digits
            .parse()
            .map_err(|_| AlgebraError::BadToken(s.to_string()))?;
        SignedBasis::new(sign, index)
    }
}

/// `entries[p][q] = i_p · i_q`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultTable {
    entries: [[SignedBasis; DIM]; DIM],
}

/// A cell where two tables disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableDiff {
    pub row: usize,
    pub col: usize,
    pub printed: SignedBasis,
    pub derived: SignedBasis,
}

impl fmt::Display for TableDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {} col {}: printed {}, derived {}", self.row, self.col, self.printed, self.derived)
    }
}

const PRINTED_TABLE: &str = include_str!("../../assets/printed_table.txt");

impl MultTable {
    /// The Clifford table generated by `i1..i4`.
    pub fn from_generators() -> Self {
        let mut entries = [[SignedBasis::pos(0); DIM]; DIM];
        let index_of = |mask: u8| BLADES.iter().position(|&m| m == mask).unwrap();
        for (p, row) in entries.iter_mut().enumerate() {
            for (q, cell) in row.iter_mut().enumerate() {
                let (a, b) = (BLADES[p], BLADES[q]);
                // Moving each generator of `b` left past the larger ones of `a`.
                let mut swaps = 0;
                for g in 0..4 {
                    if b & (1 << g) != 0 {
                        swaps += (a >> (g + 1)).count_ones();
                    }
                }
                let mut sign: i8 = if swaps % 2 == 0 { 1 } else { -1 };
                for (g, sq) in GENERATOR_SQUARES.iter().enumerate() {
                    if a & b & (1 << g) != 0 {
                        sign *= sq;
                    }
                }
                *cell = SignedBasis {
                    sign,
                    index: index_of(a ^ b) as u8,
                };
            }
        }
        Self { entries }
    }

    /// The table shipped as printed, typos included.
    pub fn parse_printed() -> Self {
        Self::parse(PRINTED_TABLE).expect("builtin printed table is well-formed")
    }

    /// 16 lines of 16 tokens; see [`SignedBasis`]'s `Display`.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let rows: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if rows.len() != DIM {
            return Err(AlgebraError::Shape(format!("expected 16 rows, found {}", rows.len())));
        }
        let mut entries = [[SignedBasis::pos(0); DIM]; DIM];
        for (p, line) in rows.iter().enumerate() {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != DIM {
                return Err(AlgebraError::Shape(format!(
                    "row {p}: expected 16 tokens, found {}",
                    tokens.len()
                )));
            }
            for (q, tok) in tokens.iter().enumerate() {
                entries[p][q] = tok.parse()?;
            }
        }
        Ok(Self { entries })
    }

    pub fn from_entries(entries: [[SignedBasis; DIM]; DIM]) -> Self {
        Self { entries }
    }

    pub fn get(&self, p: usize, q: usize) -> SignedBasis {
        self.entries[p][q]
    }

    pub fn set(&mut self, p: usize, q: usize, v: SignedBasis) {
        self.entries[p][q] = v;
    }

    /// `(±i_p)(±i_q)` as a signed basis element.
    pub fn mul_basis(&self, x: SignedBasis, y: SignedBasis) -> SignedBasis {
        let e = self.entries[x.index()][y.index()];
        SignedBasis {
            sign: e.sign * x.sign * y.sign,
            index: e.index,
        }
    }

    /// Unit row/column and the Latin-square property.
    pub fn check_well_formed(&self) -> Result<(), AlgebraError> {
        for k in 0..DIM {
            if self.entries[0][k] != SignedBasis::pos(k as u8)
                || self.entries[k][0] != SignedBasis::pos(k as u8)
            {
                return Err(AlgebraError::NotWellFormed(format!("unit row/column broken at {k}")));
            }
        }
        for p in 0..DIM {
            let mut row_seen = [false; DIM];
            let mut col_seen = [false; DIM];
            for q in 0..DIM {
                row_seen[self.entries[p][q].index()] = true;
                col_seen[self.entries[q][p].index()] = true;
            }
            if row_seen.contains(&false) {
                return Err(AlgebraError::NotWellFormed(format!("row {p} repeats an index")));
            }
            if col_seen.contains(&false) {
                return Err(AlgebraError::NotWellFormed(format!("column {p} repeats an index")));
            }
        }
        Ok(())
    }

    /// Basis triples `(p, q, r)` with `(i_p i_q) i_r != i_p (i_q i_r)`.
    pub fn associativity_failures(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for p in 0..DIM {
            for q in 0..DIM {
                for r in 0..DIM {
                    let (x, y, z) = (
                        SignedBasis::pos(p as u8),
                        SignedBasis::pos(q as u8),
                        SignedBasis::pos(r as u8),
                    );
                    let left = self.mul_basis(self.mul_basis(x, y), z);
                    let right = self.mul_basis(x, self.mul_basis(y, z));
                    if left != right {
                        bad.push((p, q, r));
                    }
                }
            }
        }
        bad
    }

    /// Diagonal signs `ε_p` with `i_p² = ε_p`.
    pub fn square_signs(&self) -> [i8; DIM] {
        std::array::from_fn(|p| self.entries[p][p].sign)
    }
}

impl fmt::Display for MultTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cells where `printed` and `derived` differ, in row-major order.
pub fn table_errata(printed: &MultTable, derived: &MultTable) -> Vec<TableDiff> {
    let mut out = Vec::new();
    for row in 0..DIM {
        for col in 0..DIM {
            let (a, b) = (printed.get(row, col), derived.get(row, col));
            if a != b {
                out.push(TableDiff {
                    row,
                    col,
                    printed: a,
                    derived: b,
                });
            }
        }
    }
    out
}
