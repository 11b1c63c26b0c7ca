//! Integer-coefficient polynomials in one variable X. These are the lifted
//! polynomials that get baked into formulas, so they parse and print in the
//! human form `X^2+X+1` / `X^2-2`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ffield::{FieldDesc, FqPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntPolyError {
    #[error("empty polynomial expression")]
    Empty,
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("malformed term at byte {0}")]
    MalformedTerm(usize),
}

/// Dense integer polynomial, lowest degree first, trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// X^2 - n, the quadratic family driving the uniform-in-p construction.
    pub fn x_squared_minus(n: i64) -> Self {
        IntPoly::new(vec![-n, 0, 1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::new(vec![]);
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as i64 * c)
                .collect(),
        )
    }

    /// Reduce into F_q coefficient-wise (through the prime subfield).
    pub fn to_fq(&self, field: &FieldDesc) -> FqPoly {
        FqPoly::from_ints(field, &self.coeffs)
    }
}

/// Lift a polynomial over a prime field to Z, coefficient representatives
/// taken in [0, p). Requires a prime-field input so the representatives are
/// canonical.
pub fn lift_poly(f: &FqPoly, field: &FieldDesc) -> Result<IntPoly, LiftError> {
    if field.degree() != 1 {
        return Err(LiftError::NotPrimeField);
    }
    Ok(IntPoly::new(
        f.coeffs().iter().map(|c| c.index() as i64).collect(),
    ))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiftError {
    #[error("lifting is defined over prime fields only")]
    NotPrimeField,
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match (i, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "X")?,
                (1, m) => write!(f, "{m}X")?,
                (d, 1) => write!(f, "X^{d}")?,
                (d, m) => write!(f, "{m}X^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = IntPolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0usize;
        let mut coeffs: Vec<i64> = Vec::new();
        let mut any = false;

        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_whitespace() {
                *i += 1;
            }
        };

        skip_ws(&mut i);
        while i < bytes.len() {
            let term_start = i;
            let mut sign = 1i64;
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -1;
                }
                i += 1;
                skip_ws(&mut i);
            } else if any {
                return Err(IntPolyError::UnexpectedChar(bytes[i], i));
            }

            let mut mag: Option<i64> = None;
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i > digits_start {
                let v: i64 = s[char_span(&bytes, digits_start)..char_span(&bytes, i)]
                    .parse()
                    .map_err(|_| IntPolyError::MalformedTerm(term_start))?;
                mag = Some(v);
            }
            skip_ws(&mut i);
            if i < bytes.len() && bytes[i] == '*' {
                i += 1;
                skip_ws(&mut i);
            }

            let mut degree = 0usize;
            if i < bytes.len() && (bytes[i] == 'X' || bytes[i] == 'x') {
                i += 1;
                degree = 1;
                if i < bytes.len() && bytes[i] == '^' {
                    i += 1;
                    let e_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == e_start {
                        return Err(IntPolyError::MalformedTerm(term_start));
                    }
                    degree = s[char_span(&bytes, e_start)..char_span(&bytes, i)]
                        .parse()
                        .map_err(|_| IntPolyError::MalformedTerm(term_start))?;
                }
            } else if mag.is_none() {
                return Err(IntPolyError::MalformedTerm(term_start));
            }

            let c = sign * mag.unwrap_or(1);
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, 0);
            }
            coeffs[degree] += c;
            any = true;
            skip_ws(&mut i);
        }

        if !any {
            return Err(IntPolyError::Empty);
        }
        Ok(IntPoly::new(coeffs))
    }
}

// Byte offset of the idx-th char, for slicing the original str.
fn char_span(chars: &[char], idx: usize) -> usize {
    chars[..idx].iter().map(|c| c.len_utf8()).sum()
}
