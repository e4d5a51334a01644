//! Forward synthesis: six conic parameters to Pascal lines.
//!
//! The six points are `A = [1, a, a^2], ..., F = [1, f, f^2]`. An array
//! `[P1 P2 P3; P4 P5 P6]` has crosshair points `P1P5 & P2P4`, `P2P6 & P3P5`
//! and `P1P6 & P3P4`, which lie on its Pascal line.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::QForm;
use crate::linalg;
use crate::projective::{conic_point, incident, join, meet, Line, Point};
use crate::scalar::{ratio, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Label {
    pub const ALL: [Label; 6] = [Label::A, Label::B, Label::C, Label::D, Label::E, Label::F];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        (b'A' + self as u8) as char
    }

    /// Lowercase parameter name (`a` for `A`).
    pub fn param_name(self) -> char {
        self.as_char().to_ascii_lowercase()
    }

    pub fn from_char(c: char) -> Option<Label> {
        match c.to_ascii_uppercase() {
            'A' => Some(Label::A),
            'B' => Some(Label::B),
            'C' => Some(Label::C),
            'D' => Some(Label::D),
            'E' => Some(Label::E),
            'F' => Some(Label::F),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// The conic parameters `a..f` of the six points; pairwise distinct.
#[derive(Clone, PartialEq, Eq)]
pub struct SextupleParams {
    values: [Scalar; 6],
}

impl SextupleParams {
    pub fn new(values: [Scalar; 6]) -> Result<Self> {
        for i in 0..6 {
            for j in i + 1..6 {
                if values[i] == values[j] {
                    return Err(Error::RepeatedParameter(
                        Label::ALL[i].param_name(),
                        Label::ALL[j].param_name(),
                    ));
                }
            }
        }
        Ok(SextupleParams { values })
    }

    pub fn from_ints(v: [i64; 6]) -> Result<Self> {
        Self::new(v.map(|x| ratio(x, 1)))
    }

    pub fn get(&self, label: Label) -> &Scalar {
        &self.values[label.index()]
    }

    pub fn values(&self) -> &[Scalar; 6] {
        &self.values
    }

    pub fn point(&self, label: Label) -> Point {
        conic_point(self.get(label))
    }

    /// Relabels the points by a product of disjoint transpositions, e.g.
    /// `[(A, E), (C, D), (B, F)]` swaps `a <-> e`, `c <-> d`, `b <-> f`.
    pub fn swapped(&self, pairs: &[(Label, Label)]) -> Self {
        let mut values = self.values.clone();
        for &(x, y) in pairs {
            values.swap(x.index(), y.index());
        }
        SextupleParams { values }
    }
}

impl fmt::Debug for SextupleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A 2x3 array of the six labels, up to row swap and column permutation.
///
/// Always stored as the lexicographically least member of its 12-element
/// orbit, comparing `top ++ bottom` as a six-letter word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PascalArray {
    top: [Label; 3],
    bottom: [Label; 3],
}

const COLUMN_PERMS: [[usize; 3]; 6] =
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

impl PascalArray {
    /// Canonical array for the arrangement `[top; bottom]`.
    pub fn new(top: [Label; 3], bottom: [Label; 3]) -> Result<Self> {
        let mut seen = [false; 6];
        for l in top.iter().chain(&bottom) {
            if std::mem::replace(&mut seen[l.index()], true) {
                let word: String = top.iter().chain(&bottom).map(|l| l.as_char()).collect();
                return Err(Error::InvalidLabels(word));
            }
        }
        Ok(orbit(top, bottom).into_iter().min().expect("orbit is nonempty"))
    }

    pub fn top(&self) -> [Label; 3] {
        self.top
    }

    pub fn bottom(&self) -> [Label; 3] {
        self.bottom
    }

    /// All twelve arrangements denoting this Pascal (not canonicalized).
    pub fn arrangements(&self) -> Vec<([Label; 3], [Label; 3])> {
        orbit(self.top, self.bottom).into_iter().map(|a| (a.top, a.bottom)).collect()
    }

    /// The column pairs, i.e. the partition of the six points it induces.
    pub fn columns(&self) -> [(Label, Label); 3] {
        std::array::from_fn(|i| (self.top[i], self.bottom[i]))
    }

    /// The sixty distinct Pascal arrays, sorted.
    pub fn all() -> Vec<PascalArray> {
        let mut out = Vec::with_capacity(60);
        for perm in permutations(&Label::ALL) {
            let arr = PascalArray::new([perm[0], perm[1], perm[2]], [perm[3], perm[4], perm[5]])
                .expect("a permutation has distinct labels");
            out.push(arr);
        }
        out.sort();
        out.dedup();
        out
    }
}

fn orbit(top: [Label; 3], bottom: [Label; 3]) -> Vec<PascalArray> {
    let mut out = Vec::with_capacity(12);
    for p in COLUMN_PERMS {
        let t = [top[p[0]], top[p[1]], top[p[2]]];
        let b = [bottom[p[0]], bottom[p[1]], bottom[p[2]]];
        out.push(PascalArray { top: t, bottom: b });
        out.push(PascalArray { top: b, bottom: t });
    }
    out
}

fn permutations(items: &[Label]) -> Vec<Vec<Label>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

impl fmt::Display for PascalArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: String = self.top.iter().map(|l| l.as_char()).collect();
        let b: String = self.bottom.iter().map(|l| l.as_char()).collect();
        write!(f, "{t}|{b}")
    }
}

impl fmt::Debug for PascalArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for PascalArray {
    type Err = Error;

    /// Parses `"ADB|ECF"` (rows separated by `|`, any order of the 12).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabels(s.to_string());
        let (t, b) = s.trim().split_once('|').ok_or_else(bad)?;
        let parse_row = |row: &str| -> Result<[Label; 3]> {
            let labels: Vec<Label> =
                row.trim().chars().map(Label::from_char).collect::<Option<_>>().ok_or_else(bad)?;
            labels.try_into().map_err(|_| bad())
        };
        PascalArray::new(parse_row(t)?, parse_row(b)?)
    }
}

/// Shorthand for arrays written as `"ABC|FED"`; panics on malformed input.
pub fn array(code: &str) -> PascalArray {
    code.parse().unwrap_or_else(|e| panic!("bad array literal {code}: {e}"))
}

/// A Pascal line with its array and, when the line is not through
/// `[0, 0, 1]`, its coordinates `<1, s, t>`.
#[derive(Clone, Debug, PartialEq)]
pub struct PascalLine {
    pub array: PascalArray,
    pub line: Line,
    pub coords: Option<(Scalar, Scalar)>,
}

/// The three crosshair points of the arrangement `[top; bottom]`.
pub fn crosshairs(
    params: &SextupleParams,
    top: [Label; 3],
    bottom: [Label; 3],
) -> Result<[Point; 3]> {
    let [p1, p2, p3] = top.map(|l| params.point(l));
    let [p4, p5, p6] = bottom.map(|l| params.point(l));
    let cross = |a: &Point, b: &Point, c: &Point, d: &Point| -> Result<Point> {
        meet(&join(a, b)?, &join(c, d)?)
    };
    Ok([
        cross(&p1, &p5, &p2, &p4)?,
        cross(&p2, &p6, &p3, &p5)?,
        cross(&p1, &p6, &p3, &p4)?,
    ])
}

/// The Pascal line of an arrangement, as computed from that arrangement's own
/// crosshairs (not the canonical representative's).
pub fn pascal_line_of(
    params: &SextupleParams,
    top: [Label; 3],
    bottom: [Label; 3],
) -> Result<Line> {
    let describe = || format!("[{}]", arrangement_code(top, bottom));
    let xs = crosshairs(params, top, bottom)
        .map_err(|e| Error::DegenerateConfiguration(format!("{}: {e}", describe())))?;
    let line = [(0, 1), (1, 2), (0, 2)]
        .iter()
        .find_map(|&(i, j)| join(&xs[i], &xs[j]).ok())
        .ok_or_else(|| {
            Error::DegenerateConfiguration(format!("{}: crosshair points coincide", describe()))
        })?;
    if !xs.iter().all(|x| incident(x, &line)) {
        return Err(Error::DegenerateConfiguration(format!(
            "{}: crosshair points are not collinear",
            describe()
        )));
    }
    Ok(line)
}

fn arrangement_code(top: [Label; 3], bottom: [Label; 3]) -> String {
    let t: String = top.iter().map(|l| l.as_char()).collect();
    let b: String = bottom.iter().map(|l| l.as_char()).collect();
    format!("{t}|{b}")
}

pub fn pascal_line(params: &SextupleParams, arr: &PascalArray) -> Result<PascalLine> {
    let line = pascal_line_of(params, arr.top, arr.bottom)?;
    let coords = line_coords(&line).ok();
    Ok(PascalLine { array: *arr, line, coords })
}

/// The `(s, t)` with the line proportional to `(t, -s/2, 1)`, i.e. line
/// coordinates `<1, s, t>`.
pub fn line_coords(line: &Line) -> Result<(Scalar, Scalar)> {
    let z = line.form().coeffs();
    if z[2].is_zero() {
        return Err(Error::ChartDegenerate);
    }
    let t = &z[0] / &z[2];
    let s = -(&z[1] * Scalar::from_integer(2.into())) / &z[2];
    Ok((s, t))
}

/// The line `<1, s, t>` as the quadratic `(t, -s/2, 1)`.
pub fn line_from_coords(s: &Scalar, t: &Scalar) -> Line {
    let form = QForm::cayley(vec![t.clone(), -(s * ratio(1, 2)), Scalar::one()])
        .expect("three coefficients");
    Line::new(form).expect("leading coefficient is one")
}

/// Arrays of the four Pascals the sextuple is reconstructed from.
pub fn special_arrays() -> [PascalArray; 4] {
    [array("ADB|ECF"), array("ACF|EDB"), array("ADF|ECB"), array("ABC|FDE")]
}

/// The four special Pascals `l1, l2, l3, l*`, each normalized to
/// `(t, -s/2, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourPascals {
    pub l1: PascalLine,
    pub l2: PascalLine,
    pub l3: PascalLine,
    pub lstar: PascalLine,
}

impl FourPascals {
    pub fn lines(&self) -> [&Line; 4] {
        [&self.l1.line, &self.l2.line, &self.l3.line, &self.lstar.line]
    }

    /// `(s, t)` of each line in the order `l1, l2, l3, l*`.
    pub fn coords(&self) -> [(Scalar, Scalar); 4] {
        [&self.l1, &self.l2, &self.l3, &self.lstar]
            .map(|p| p.coords.clone().expect("special Pascals carry coordinates"))
    }
}

pub fn four_special_pascals(params: &SextupleParams) -> Result<FourPascals> {
    let [l1, l2, l3, lstar] = special_arrays().map(|arr| -> Result<PascalLine> {
        let raw = pascal_line(params, &arr)?;
        let (s, t) = line_coords(&raw.line)?;
        Ok(PascalLine { array: arr, line: line_from_coords(&s, &t), coords: Some((s, t)) })
    });
    Ok(FourPascals { l1: l1?, l2: l2?, l3: l3?, lstar: lstar? })
}

/// All sixty Pascals, in the sorted order of their canonical arrays. Fails if
/// any two coincide.
pub fn all_sixty(params: &SextupleParams) -> Result<Vec<PascalLine>> {
    let lines: Vec<PascalLine> = PascalArray::all()
        .iter()
        .map(|arr| pascal_line(params, arr))
        .collect::<Result<_>>()?;
    for (i, p) in lines.iter().enumerate() {
        for q in &lines[i + 1..] {
            if p.line.same_as(&q.line) {
                return Err(Error::DegenerateConfiguration(format!(
                    "Pascals {} and {} coincide",
                    p.array, q.array
                )));
            }
        }
    }
    Ok(lines)
}

pub fn steiner_triple() -> [PascalArray; 3] {
    [array("ABC|FED"), array("ABC|DFE"), array("ABC|EDF")]
}

pub fn kirkman_triple() -> [PascalArray; 3] {
    [array("ABC|FED"), array("ADF|CEB"), array("ACF|EBD")]
}

/// `det [[1, s1, t1], [1, s2, t2], [1, s3, t3]]` for three Pascals; zero iff
/// they are concurrent.
pub fn concurrency_determinant(params: &SextupleParams, arrays: &[PascalArray; 3]) -> Result<Scalar> {
    let mut rows = Vec::with_capacity(3);
    for arr in arrays {
        let line = pascal_line(params, arr)?.line;
        let (s, t) = line_coords(&line)?;
        rows.push(vec![Scalar::one(), s, t]);
    }
    Ok(linalg::determinant(&rows))
}

pub fn steiner_concurrent(params: &SextupleParams) -> Result<bool> {
    Ok(concurrency_determinant(params, &steiner_triple())?.is_zero())
}

pub fn kirkman_concurrent(params: &SextupleParams) -> Result<bool> {
    Ok(concurrency_determinant(params, &kirkman_triple())?.is_zero())
}
