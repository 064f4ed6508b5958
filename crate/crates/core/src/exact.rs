//! Exact scalars over ℚ or a prime field F_p (p odd) and small dense linear algebra.
//!
//! Every value carries its field tag. Mixing fields inside one computation is a
//! programming error for the arithmetic operators and a reported error for the
//! fallible constructors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// F_p for an odd prime p. Characteristic 2 is rejected.
    pub fn prime(p: u32) -> Result<Field> {
        if p == 2 {
            return Err(Error::UnsupportedField {
                field: "Fp:2".into(),
                reason: "characteristic 2 is excluded".into(),
            });
        }
        if !is_prime(p) {
            return Err(Error::UnsupportedField {
                field: format!("Fp:{p}"),
                reason: "modulus is not prime".into(),
            });
        }
        Ok(Field::Prime(p))
    }

    /// Accepts `Q`, `Fp:<p>` and the short form `F<p>`.
    pub fn parse(s: &str) -> Result<Field> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("GF:"))
            .or_else(|| t.strip_prefix('F'));
        match digits.and_then(|d| d.parse::<u32>().ok()) {
            Some(p) => Field::prime(p),
            None => Err(Error::invalid(format!("unknown field `{s}` (expected Q or Fp:<p>)"))),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p as u64),
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Fp {
                value: v.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::invalid("zero denominator"));
        }
        let d = self.from_i64(den);
        match d.inv() {
            Some(di) => Ok(&self.from_i64(num) * &di),
            None => Err(Error::invalid(format!("denominator {den} vanishes in {self}"))),
        }
    }

    /// The k-th element of F_p in the order 0, 1, …, p−1.
    pub fn element(self, k: u32) -> Scalar {
        match self {
            Field::Rational => self.from_i64(k as i64),
            Field::Prime(p) => Scalar::Fp { value: k % p, p },
        }
    }

    /// Parses `"3"`, `"-1/2"` into this field.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let n: BigInt = num
            .parse()
            .map_err(|_| Error::invalid(format!("bad scalar `{s}`")))?;
        let d: BigInt = den
            .parse()
            .map_err(|_| Error::invalid(format!("bad scalar `{s}`")))?;
        if d.is_zero() {
            return Err(Error::invalid(format!("zero denominator in `{s}`")));
        }
        match self {
            Field::Rational => Ok(Scalar::Q(BigRational::new(n, d))),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let nv = n.mod_floor(&pm).to_u32().unwrap_or(0);
                let dv = d.mod_floor(&pm).to_u32().unwrap_or(0);
                let dn = Scalar::Fp { value: dv, p };
                let di = dn
                    .inv()
                    .ok_or_else(|| Error::invalid(format!("denominator of `{s}` vanishes mod {p}")))?;
                Ok(&Scalar::Fp { value: nv, p } * &di)
            }
        }
    }

    /// Some square root of `x` if one exists in the field. Over F_p the least
    /// residue is returned; over ℚ the non-negative root.
    pub fn sqrt(self, x: &Scalar) -> Option<Scalar> {
        match (self, x) {
            (Field::Rational, Scalar::Q(q)) => {
                if q.is_negative() {
                    return None;
                }
                let n = q.numer().sqrt();
                let d = q.denom().sqrt();
                if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
                    Some(Scalar::Q(BigRational::new(n, d)))
                } else {
                    None
                }
            }
            (Field::Prime(p), Scalar::Fp { value, .. }) => (0..p)
                .find(|s| (*s as u64 * *s as u64) % p as u64 == *value as u64)
                .map(|s| Scalar::Fp { value: s, p }),
            _ => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Field::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Q(q) => Some(Scalar::Q(q.recip())),
            Scalar::Fp { value, p } => Some(Scalar::Fp {
                value: pow_mod(*value as u64, *p as u64 - 2, *p as u64) as u32,
                p: *p,
            }),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The value as an exact rational, when the scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }

    /// Residue in 0..p for F_p scalars.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Fp { value, .. } => Some(*value),
            Scalar::Q(_) => None,
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

#[track_caller]
fn same_field(a: &Scalar, b: &Scalar) {
    if a.field() != b.field() {
        panic!("arithmetic across fields {} and {}", a.field(), b.field());
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    #[track_caller]
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => {
                Scalar::Fp {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    p: *p,
                }
            }
            _ => {
                same_field(self, rhs);
                unreachable!()
            }
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    #[track_caller]
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => {
                Scalar::Fp {
                    value: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                    p: *p,
                }
            }
            _ => {
                same_field(self, rhs);
                unreachable!()
            }
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    #[track_caller]
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => {
                Scalar::Fp {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    p: *p,
                }
            }
            _ => {
                same_field(self, rhs);
                unreachable!()
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { value, p } => Scalar::Fp {
                value: (*p - *value) % *p,
                p: *p,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            #[track_caller]
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            #[track_caller]
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds from rows; all rows must have equal length and every entry must
    /// belong to `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::dim(format!("row {i} has {} entries, expected {c}", row.len())));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch(field, x.field()));
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Matrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged integer matrix");
            for (j, v) in row.iter().enumerate() {
                m.data[i * c + j] = field.from_i64(*v);
            }
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let x = f(i, j);
                debug_assert_eq!(x.field(), field);
                data.push(x);
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::dim(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dim("shape mismatch"));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Rows `rs` and columns `cs`, in the given order.
    pub fn submatrix(&self, rs: &[usize], cs: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rs.len(), cs.len(), |i, j| self.get(rs[i], cs[j]).clone())
    }

    /// Reduced row echelon form and pivot columns. Pivots are the first nonzero
    /// entry scanning rows downward within each column, columns left to right.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = &m.data[idx] * &inv;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let t = m.get(r, j);
                    if t.is_zero() {
                        continue;
                    }
                    let d = &f * t;
                    let idx = i * m.cols + j;
                    m.data[idx] = &m.data[idx] - &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column (in column
    /// order), with a 1 in that free position.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut out = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (row, &c) in pivots.iter().enumerate() {
                let x = r.get(row, f);
                if !x.is_zero() {
                    v[c] = -x;
                }
            }
            out.push(v);
        }
        out
    }

    /// A particular solution of `self · x = rhs` (free variables set to 0), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if rhs.len() != self.rows {
            return Err(Error::dim(format!("rhs of length {} for {} rows", rhs.len(), self.rows)));
        }
        if let Some(x) = rhs.iter().find(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, x.field()));
        }
        let aug = Matrix::from_fn(self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let (r, pivots) = aug.rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] >= n) {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Exact determinant by elimination.
    pub fn determinant(&self) -> Option<Scalar> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let pr = (c..n).find(|&i| !m.get(i, c).is_zero())?;
            if pr != c {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let d = &f * m.get(c, j);
                    let idx = i * n + j;
                    m.data[idx] = &m.data[idx] - &d;
                }
            }
        }
        Some(det)
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    #[track_caller]
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs).expect("matrix product shape")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of `field^ambient`, kept as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_fn(field, vectors.len(), ambient, |i, j| vectors[i][j].clone());
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// `v` minus its component along the echelon basis; zero iff `v` is in the
    /// subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = w[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.field, self.ambient, &all)
    }

    /// Greedily picks, in order, the indices of `candidates` that extend a basis
    /// of `self` to a basis of `self + span(candidates)`.
    pub fn complement_indices(&self, candidates: &[Vec<Scalar>]) -> Vec<usize> {
        let mut acc = self.clone();
        let mut out = Vec::new();
        for (i, v) in candidates.iter().enumerate() {
            if !acc.contains(v) {
                acc = acc.sum(&Subspace::span(self.field, self.ambient, std::slice::from_ref(v)));
                out.push(i);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rejects_characteristic_two_and_composites() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert_eq!(Field::prime(3).unwrap(), Field::Prime(3));
        assert_eq!(Field::parse("Fp:5").unwrap(), Field::Prime(5));
        assert_eq!(Field::parse("Q").unwrap(), Field::Rational);
        assert!(Field::parse("Fp:2").is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(q(), 2).rank(), 2);
        assert_eq!(Matrix::zeros(q(), 3, 3).rank(), 0);
        assert_eq!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(q(), 3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(q(), 2, 2).kernel_basis().len(), 2);
        let f3 = Field::Prime(3);
        let k = Matrix::from_i64(f3, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![f3.from_i64(-1), f3.one()]]);
    }

    #[test]
    fn solve_examples() {
        let x = Matrix::identity(q(), 2)
            .solve(&[q().from_i64(1), q().from_i64(2)])
            .unwrap();
        assert_eq!(x, Some(vec![q().from_i64(1), q().from_i64(2)]));
        let none = Matrix::from_i64(q(), &[&[0]]).solve(&[q().one()]).unwrap();
        assert_eq!(none, None);
        let half = Matrix::from_i64(q(), &[&[2]]).solve(&[q().one()]).unwrap();
        assert_eq!(half, Some(vec![q().from_ratio(1, 2).unwrap()]));
        assert!(Matrix::identity(q(), 2).solve(&[q().one()]).is_err());
    }

    #[test]
    fn mixed_fields_are_reported() {
        let r = Matrix::from_rows(q(), vec![vec![q().one(), Field::Prime(3).one()]]);
        assert!(matches!(r, Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn scalar_parsing_and_display() {
        let h = q().parse_scalar("-2/4").unwrap();
        assert_eq!(h.to_string(), "-1/2");
        let f5 = Field::Prime(5);
        assert_eq!(f5.parse_scalar("1/2").unwrap(), f5.from_i64(3));
        assert!(f5.parse_scalar("1/5").is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(q().sqrt(&q().from_ratio(9, 4).unwrap()), Some(q().from_ratio(3, 2).unwrap()));
        assert_eq!(q().sqrt(&q().from_i64(2)), None);
        let f3 = Field::Prime(3);
        assert_eq!(f3.sqrt(&f3.one()), Some(f3.one()));
        assert_eq!(f3.sqrt(&f3.from_i64(2)), None);
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_i64(q(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(q(), 2));
        assert_eq!(m.determinant().unwrap(), q().one());
        assert!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(Matrix::identity(q(), 0).inverse(), Some(Matrix::identity(q(), 0)));
    }

    #[test]
    fn subspace_membership() {
        let f = q();
        let s = Subspace::span(f, 3, &[vec![f.one(), f.one(), f.zero()], vec![f.from_i64(2), f.from_i64(2), f.zero()]]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[f.from_i64(5), f.from_i64(5), f.zero()]));
        assert!(!s.contains(&[f.one(), f.zero(), f.zero()]));
        let ext = s.complement_indices(&[vec![f.one(), f.one(), f.zero()], vec![f.zero(), f.zero(), f.one()]]);
        assert_eq!(ext, vec![1]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix(field: Field) -> impl Strategy<Value = Matrix> {
            (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
                proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                    Matrix::from_fn(field, r, c, |i, j| field.from_i64(v[i * c + j]))
                })
            })
        }

        proptest! {
            #[test]
            fn rank_nullity_q(m in matrix(Field::Rational)) {
                let k = m.kernel_basis();
                prop_assert_eq!(m.rank() + k.len(), m.cols());
                for v in &k {
                    prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
                }
            }

            #[test]
            fn rank_nullity_f5(m in matrix(Field::Prime(5))) {
                prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
            }

            #[test]
            fn solve_reproduces_rhs(m in matrix(Field::Rational), seed in proptest::collection::vec(-3i64..4, 5)) {
                let f = Field::Rational;
                let rhs: Vec<Scalar> = (0..m.rows()).map(|i| f.from_i64(seed[i])).collect();
                if let Some(x) = m.solve(&rhs).unwrap() {
                    prop_assert_eq!(m.mul_vec(&x).unwrap(), rhs);
                }
                let x0: Vec<Scalar> = (0..m.cols()).map(|i| f.from_i64(seed[i])).collect();
                let b = m.mul_vec(&x0).unwrap();
                prop_assert!(m.solve(&b).unwrap().is_some());
            }
        }
    }
}
