//! Simple Lie groups: real rank and complexified type.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{GeomError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimpleFactor {
    SlR(u32),
    Su(u32, u32),
    SlC(u32),
    So(u32, u32),
    SoC(u32),
    /// `Sp(2n, ℝ)`, storing `n`.
    SpR(u32),
    Sp(u32, u32),
    /// `Sp(2n, ℂ)`, storing `n`.
    SpC(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
    SO3,
    SO4,
}

/// Simple complex types, normalized through the low-rank coincidences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComplexType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl fmt::Display for ComplexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexType::A(n) => write!(f, "A{n}"),
            ComplexType::B(n) => write!(f, "B{n}"),
            ComplexType::C(n) => write!(f, "C{n}"),
            ComplexType::D(n) => write!(f, "D{n}"),
            ComplexType::G2 => write!(f, "G2"),
            ComplexType::F4 => write!(f, "F4"),
            ComplexType::E6 => write!(f, "E6"),
            ComplexType::E7 => write!(f, "E7"),
            ComplexType::E8 => write!(f, "E8"),
        }
    }
}

/// Type of `so(m, ℂ)`, `m ≥ 3`: `A1`, `A1+A1`, `C2`, `A3`, then `B`/`D`.
fn orthogonal_type(m: u32) -> Vec<ComplexType> {
    match m {
        3 => vec![ComplexType::A(1)],
        4 => vec![ComplexType::A(1), ComplexType::A(1)],
        5 => vec![ComplexType::C(2)],
        6 => vec![ComplexType::A(3)],
        m if m % 2 == 1 => vec![ComplexType::B((m - 1) / 2)],
        m => vec![ComplexType::D(m / 2)],
    }
}

fn symplectic_type(n: u32) -> ComplexType {
    if n == 1 {
        ComplexType::A(1)
    } else {
        ComplexType::C(n)
    }
}

fn doubled(t: Vec<ComplexType>) -> Vec<ComplexType> {
    t.iter().chain(&t).copied().collect()
}

impl SimpleFactor {
    pub fn validate(self) -> Result<Self> {
        use SimpleFactor::*;
        let ok = match self {
            SlR(n) | SlC(n) => n >= 2,
            Su(p, q) => p + q >= 2,
            So(p, q) => p + q >= 3,
            SoC(n) => n >= 3,
            SpR(n) | SpC(n) => n >= 1,
            Sp(p, q) => p + q >= 1,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(GeomError::InvalidInput(format!(
                "invalid parameters for {self}"
            )))
        }
    }

    pub fn is_compact(self) -> bool {
        self.real_rank() == 0
    }

    pub fn real_rank(self) -> u32 {
        use SimpleFactor::*;
        match self {
            SlR(n) | SlC(n) => n - 1,
            Su(p, q) | So(p, q) | Sp(p, q) => p.min(q),
            SoC(n) => n / 2,
            SpR(n) | SpC(n) => n,
            G2 => 2,
            F4 => 4,
            E6 => 6,
            E7 => 7,
            E8 => 8,
            SO3 | SO4 => 0,
        }
    }

    /// Simple types of the complexified Lie algebra; complex groups count twice.
    pub fn complex_type(self) -> Vec<ComplexType> {
        use SimpleFactor::*;
        match self {
            SlR(n) => vec![ComplexType::A(n - 1)],
            Su(p, q) => vec![ComplexType::A(p + q - 1)],
            SlC(n) => doubled(vec![ComplexType::A(n - 1)]),
            So(p, q) => orthogonal_type(p + q),
            SoC(n) => doubled(orthogonal_type(n)),
            SpR(n) => vec![symplectic_type(n)],
            Sp(p, q) => vec![symplectic_type(p + q)],
            SpC(n) => doubled(vec![symplectic_type(n)]),
            G2 => doubled(vec![ComplexType::G2]),
            F4 => doubled(vec![ComplexType::F4]),
            E6 => doubled(vec![ComplexType::E6]),
            E7 => doubled(vec![ComplexType::E7]),
            E8 => doubled(vec![ComplexType::E8]),
            SO3 => orthogonal_type(3),
            SO4 => orthogonal_type(4),
        }
    }
}

pub fn real_rank(f: SimpleFactor) -> u32 {
    f.real_rank()
}

pub fn complex_type(f: SimpleFactor) -> Vec<ComplexType> {
    let mut t = f.complex_type();
    t.sort();
    t
}

pub fn is_isotypic(factors: &[SimpleFactor]) -> bool {
    let mut types = factors.iter().flat_map(|f| f.complex_type());
    match types.next() {
        Some(first) => types.all(|t| t == first),
        None => false,
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SimpleFactor::*;
        match self {
            SlR(n) => write!(f, "SL({n},R)"),
            Su(p, q) => write!(f, "SU({p},{q})"),
            SlC(n) => write!(f, "SL({n},C)"),
            So(p, q) => write!(f, "SO({p},{q})"),
            SoC(n) => write!(f, "SO({n},C)"),
            SpR(n) => write!(f, "Sp({},R)", 2 * n),
            Sp(p, q) => write!(f, "Sp({p},{q})"),
            SpC(n) => write!(f, "Sp({},C)", 2 * n),
            G2 => write!(f, "G2"),
            F4 => write!(f, "F4"),
            E6 => write!(f, "E6"),
            E7 => write!(f, "E7"),
            E8 => write!(f, "E8"),
            SO3 => write!(f, "SO(3)"),
            SO4 => write!(f, "SO(4)"),
        }
    }
}

impl FromStr for SimpleFactor {
    type Err = GeomError;

    /// `SL(3,R)`, `SU(2,1)`, `SO(2,2)`, `SO(4,C)`, `Sp(4,R)`, `Sp(2,1)`, `G2`, `SO(3)`, …
    fn from_str(s: &str) -> Result<Self> {
        use SimpleFactor::*;
        let bad = || GeomError::InvalidInput(format!("cannot parse simple factor {s:?}"));
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .replace('ℝ', "R")
            .replace('ℂ', "C");
        match t.as_str() {
            "G2" => return Ok(G2),
            "F4" => return Ok(F4),
            "E6" => return Ok(E6),
            "E7" => return Ok(E7),
            "E8" => return Ok(E8),
            _ => {}
        }
        let open = t.find('(').ok_or_else(bad)?;
        let name = &t[..open];
        let args: Vec<&str> = t[open + 1..]
            .strip_suffix(')')
            .ok_or_else(bad)?
            .split(',')
            .collect();
        let num = |a: &str| a.parse::<u32>().map_err(|_| bad());
        let f = match (name.to_ascii_uppercase().as_str(), args.as_slice()) {
            ("SL", [n, "R"]) => SlR(num(n)?),
            ("SL", [n, "C"]) => SlC(num(n)?),
            ("SU", [p, q]) => Su(num(p)?, num(q)?),
            ("SO", ["3"]) => SO3,
            ("SO", ["4"]) => SO4,
            ("SO", [n]) => So(num(n)?, 0),
            ("SO", [n, "C"]) => SoC(num(n)?),
            ("SO", [p, q]) => So(num(p)?, num(q)?),
            ("SP", [n, "R" | "C"]) => {
                let n = num(n)?;
                if n % 2 == 1 {
                    return Err(GeomError::InvalidInput(format!(
                        "symplectic dimension must be even in {s:?}"
                    )));
                }
                if args[1] == "R" {
                    SpR(n / 2)
                } else {
                    SpC(n / 2)
                }
            }
            ("SP", [p, q]) => Sp(num(p)?, num(q)?),
            _ => return Err(bad()),
        };
        f.validate()
    }
}

impl Serialize for SimpleFactor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SimpleFactor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Splits `"SL(3,R), SO(2,2)"` at top-level commas.
pub fn split_factors(s: &str) -> Vec<String> {
    let mut out = vec![];
    let (mut depth, mut cur) = (0i32, String::new());
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if (c == ',' || c == ';') && depth == 0 {
            out.push(std::mem::take(&mut cur).trim().to_string());
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

pub fn parse_factors(s: &str) -> Result<Vec<SimpleFactor>> {
    let fs: Vec<SimpleFactor> = split_factors(s)
        .iter()
        .map(|f| f.parse())
        .collect::<Result<_>>()?;
    if fs.is_empty() {
        return Err(GeomError::InvalidInput("empty factor list".into()));
    }
    Ok(fs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> SimpleFactor {
        s.parse().unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(real_rank(f("SL(3,R)")), 2);
        assert_eq!(real_rank(f("SO(2,2)")), 2);
        assert_eq!(real_rank(f("SO(4)")), 0);
        assert_eq!(real_rank(f("SU(2,1)")), 1);
        assert_eq!(real_rank(f("Sp(4,R)")), 2);
        assert_eq!(real_rank(f("Sp(2,1)")), 1);
        assert_eq!(real_rank(f("SL(2,C)")), 1);
        assert_eq!(real_rank(f("E8")), 8);
    }

    #[test]
    fn types() {
        use ComplexType::*;
        assert_eq!(complex_type(f("SO(3)")), vec![A(1)]);
        assert_eq!(complex_type(f("SO(2,2)")), vec![A(1), A(1)]);
        assert_eq!(complex_type(f("SO(3,1)")), vec![A(1), A(1)]);
        assert_eq!(complex_type(f("SL(3,R)")), vec![A(2)]);
        assert_eq!(complex_type(f("SO(4,C)")), vec![A(1); 4]);
        assert_eq!(complex_type(f("Sp(4,R)")), complex_type(f("SO(3,2)")));
        assert_eq!(complex_type(f("SO(5,1)")), vec![A(3)]);
        assert_eq!(complex_type(f("SO(4,4)")), vec![D(4)]);
        assert_eq!(complex_type(f("SO(4,3)")), vec![B(3)]);
    }

    #[test]
    fn isotypic_examples() {
        assert!(is_isotypic(&[f("SO(2,2)"), f("SO(4)")]));
        assert!(is_isotypic(&[f("SO(3,1)"), f("SO(2,2)"), f("SO(4,C)")]));
        assert!(!is_isotypic(&[f("SL(3,R)"), f("SO(4)")]));
    }

    #[test]
    fn parsing() {
        assert_eq!(f("SL(3,ℝ)"), SimpleFactor::SlR(3));
        assert_eq!(f("sp(6, R)"), SimpleFactor::SpR(3));
        assert!("Sp(3,R)".parse::<SimpleFactor>().is_err());
        assert!("SL(1,R)".parse::<SimpleFactor>().is_err());
        assert!("XY(2)".parse::<SimpleFactor>().is_err());
        assert_eq!(
            split_factors("SL(3,R), SO(2,2);G2"),
            ["SL(3,R)", "SO(2,2)", "G2"]
        );
        for s in [
            "SL(3,R)", "SU(2,1)", "SL(2,C)", "SO(2,2)", "SO(5,C)", "Sp(4,R)", "Sp(2,1)", "Sp(4,C)",
            "G2", "SO(3)", "SO(4)",
        ] {
            assert_eq!(f(s).to_string(), s);
        }
    }
}
