//! Bounded symmetric domains by Cartan type.
//!
//! A domain spec is either an irreducible domain — a family tag `I`..`VI`
//! plus integer parameters — or a product of irreducibles. Parameters are
//! restricted to the canonical ranges under which the six families are
//! pairwise non-isomorphic (low parameters hit exceptional isomorphisms and
//! are rejected rather than rewritten):
//!
//! | family   | parameters    | range        | real dimension        | rank |
//! |----------|---------------|--------------|-----------------------|------|
//! | `I(p,q)` | p, q          | p >= q >= 1  | 2pq                   | q    |
//! | `II(n)`  | n             | n >= 5       | n(n-1)                | n/2  |
//! | `III(n)` | n             | n >= 2       | n(n+1)                | n    |
//! | `IV(n)`  | n             | n >= 5       | 2n                    | 2    |
//! | `V`      | —             |              | 32                    | 2    |
//! | `VI`     | —             |              | 54                    | 3    |
//!
//! Tube type (the associated Shilov boundary fibers over a circle) holds
//! exactly for `I(q,q)`, `II(even)`, `III`, `IV`, `VI`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// The six families of irreducible bounded symmetric domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl Family {
    /// How many integer parameters the family takes.
    pub fn param_count(self) -> usize {
        match self {
            Family::I => 2,
            Family::II | Family::III | Family::IV => 1,
            Family::V | Family::VI => 0,
        }
    }

    fn from_token(token: &str) -> Option<Family> {
        match token {
            "i" => Some(Family::I),
            "ii" => Some(Family::II),
            "iii" => Some(Family::III),
            "iv" => Some(Family::IV),
            "v" => Some(Family::V),
            "vi" => Some(Family::VI),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::I => "I",
            Family::II => "II",
            Family::III => "III",
            Family::IV => "IV",
            Family::V => "V",
            Family::VI => "VI",
        };
        f.write_str(s)
    }
}

/// Errors from parsing or validating a domain spec.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("type {family} takes {expected} parameter(s), got {found}")]
    ParamCount {
        family: Family,
        expected: usize,
        found: usize,
    },
    #[error("type {family} requires {bound}")]
    OutOfRange { family: Family, bound: &'static str },
    #[error("a product needs at least one factor")]
    EmptyProduct,
    #[error("operation is defined for irreducible domains only")]
    NotIrreducible,
}

/// An irreducible bounded symmetric domain in canonical parameter range.
///
/// Construct through [`Irreducible::type_i`] and friends (or by parsing);
/// the operations on this type assume the canonical ranges hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Irreducible {
    I { p: u32, q: u32 },
    II { n: u32 },
    III { n: u32 },
    IV { n: u32 },
    V,
    VI,
}

impl Irreducible {
    /// `I(p,q)` with `p >= q >= 1`.
    pub fn type_i(p: u32, q: u32) -> Result<Self, DomainError> {
        if p >= q && q >= 1 {
            Ok(Irreducible::I { p, q })
        } else {
            Err(DomainError::OutOfRange {
                family: Family::I,
                bound: "p >= q >= 1",
            })
        }
    }

    /// `II(n)` with `n >= 5`.
    pub fn type_ii(n: u32) -> Result<Self, DomainError> {
        if n >= 5 {
            Ok(Irreducible::II { n })
        } else {
            Err(DomainError::OutOfRange {
                family: Family::II,
                bound: "n >= 5",
            })
        }
    }

    /// `III(n)` with `n >= 2`.
    pub fn type_iii(n: u32) -> Result<Self, DomainError> {
        if n >= 2 {
            Ok(Irreducible::III { n })
        } else {
            Err(DomainError::OutOfRange {
                family: Family::III,
                bound: "n >= 2",
            })
        }
    }

    /// `IV(n)` with `n >= 5`.
    pub fn type_iv(n: u32) -> Result<Self, DomainError> {
        if n >= 5 {
            Ok(Irreducible::IV { n })
        } else {
            Err(DomainError::OutOfRange {
                family: Family::IV,
                bound: "n >= 5",
            })
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Irreducible::I { .. } => Family::I,
            Irreducible::II { .. } => Family::II,
            Irreducible::III { .. } => Family::III,
            Irreducible::IV { .. } => Family::IV,
            Irreducible::V => Family::V,
            Irreducible::VI => Family::VI,
        }
    }

    pub fn params(&self) -> Vec<u32> {
        match *self {
            Irreducible::I { p, q } => vec![p, q],
            Irreducible::II { n } | Irreducible::III { n } | Irreducible::IV { n } => vec![n],
            Irreducible::V | Irreducible::VI => vec![],
        }
    }

    /// True if the parameters satisfy the canonical range for the family.
    pub fn is_canonical(&self) -> bool {
        match *self {
            Irreducible::I { p, q } => p >= q && q >= 1,
            Irreducible::II { n } => n >= 5,
            Irreducible::III { n } => n >= 2,
            Irreducible::IV { n } => n >= 5,
            Irreducible::V | Irreducible::VI => true,
        }
    }

    /// Real dimension of the domain as an open subset of complex affine space.
    pub fn ambient_dim(&self) -> u64 {
        match *self {
            Irreducible::I { p, q } => 2 * u64::from(p) * u64::from(q),
            Irreducible::II { n } => {
                let n = u64::from(n);
                // both parities reduce to n(n-1): 2q(2q-1) for n = 2q, 2q(2q+1) for n = 2q+1
                if n % 2 == 0 {
                    let q = n / 2;
                    2 * q * (2 * q - 1)
                } else {
                    let q = (n - 1) / 2;
                    2 * q * (2 * q + 1)
                }
            }
            Irreducible::III { n } => u64::from(n) * (u64::from(n) + 1),
            Irreducible::IV { n } => 2 * u64::from(n),
            Irreducible::V => 32,
            Irreducible::VI => 54,
        }
    }

    pub fn rank(&self) -> u32 {
        match *self {
            Irreducible::I { q, .. } => q,
            Irreducible::II { n } => n / 2,
            Irreducible::III { n } => n,
            Irreducible::IV { .. } => 2,
            Irreducible::V => 2,
            Irreducible::VI => 3,
        }
    }

    pub fn tube_class(&self) -> TubeClass {
        match *self {
            Irreducible::I { p, q } => {
                if p == q {
                    TubeClass::Tube
                } else {
                    TubeClass::NonTube
                }
            }
            Irreducible::II { n } => {
                if n % 2 == 0 {
                    TubeClass::Tube
                } else {
                    TubeClass::NonTube
                }
            }
            Irreducible::III { .. } | Irreducible::IV { .. } | Irreducible::VI => TubeClass::Tube,
            Irreducible::V => TubeClass::NonTube,
        }
    }

    pub fn is_tube(&self) -> bool {
        self.tube_class() == TubeClass::Tube
    }
}

impl fmt::Display for Irreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family())?;
        let params = self.params();
        if !params.is_empty() {
            write!(f, "(")?;
            for (i, x) in params.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Whether an irreducible domain is biholomorphic to a tube over a cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TubeClass {
    Tube,
    NonTube,
}

impl fmt::Display for TubeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubeClass::Tube => f.write_str("tube"),
            TubeClass::NonTube => f.write_str("non-tube"),
        }
    }
}

/// An irreducible domain or a finite product of irreducible domains.
///
/// Product factors are kept sorted under the derived total order on
/// [`Irreducible`], so structural equality of specs is isomorphism of the
/// products up to permutation of factors. A product always has at least two
/// factors; a one-factor product collapses to `Irreducible`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DomainSpec {
    Irreducible(Irreducible),
    Product(Vec<Irreducible>),
}

impl DomainSpec {
    /// Builds a spec from factors, sorting them into canonical order.
    pub fn product(mut factors: Vec<Irreducible>) -> Result<DomainSpec, DomainError> {
        if factors.is_empty() {
            return Err(DomainError::EmptyProduct);
        }
        if factors.len() == 1 {
            return Ok(DomainSpec::Irreducible(factors.remove(0)));
        }
        factors.sort();
        Ok(DomainSpec::Product(factors))
    }

    pub fn factors(&self) -> &[Irreducible] {
        match self {
            DomainSpec::Irreducible(d) => std::slice::from_ref(d),
            DomainSpec::Product(fs) => fs,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self, DomainSpec::Irreducible(_))
    }

    pub fn as_irreducible(&self) -> Option<&Irreducible> {
        match self {
            DomainSpec::Irreducible(d) => Some(d),
            DomainSpec::Product(_) => None,
        }
    }

    pub fn ambient_dim(&self) -> u64 {
        self.factors().iter().map(Irreducible::ambient_dim).sum()
    }

    pub fn rank(&self) -> u32 {
        self.factors().iter().map(Irreducible::rank).sum()
    }

    /// Tube classification; defined for irreducible specs only.
    pub fn tube_class(&self) -> Result<TubeClass, DomainError> {
        self.as_irreducible()
            .map(Irreducible::tube_class)
            .ok_or(DomainError::NotIrreducible)
    }

    pub fn parse(text: &str) -> Result<DomainSpec, DomainError> {
        parse_domain(text)
    }
}

impl From<Irreducible> for DomainSpec {
    fn from(d: Irreducible) -> Self {
        DomainSpec::Irreducible(d)
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.factors().iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DomainSpec {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_domain(s)
    }
}

/// Parses the grammar `FAMILY [ "(" int { "," int } ")" ]`, with `x`
/// separating product factors. Family letters are case-insensitive and
/// whitespace is ignored, so `"i(3,2) X iv(6)"` parses.
pub fn parse_domain(text: &str) -> Result<DomainSpec, DomainError> {
    let tokens = lex(text)?;
    let mut pos = 0;
    let mut factors = Vec::new();
    loop {
        let (factor, next) = parse_factor(&tokens, pos)?;
        factors.push(factor);
        pos = next;
        match tokens.get(pos) {
            None => break,
            Some(Token::Sep) => {
                pos += 1;
                if pos == tokens.len() {
                    return Err(DomainError::Syntax("trailing 'x' with no factor".into()));
                }
            }
            Some(t) => {
                return Err(DomainError::Syntax(format!(
                    "expected 'x' or end of input, found {t}"
                )))
            }
        }
    }
    DomainSpec::product(factors)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Number(u32),
    Open,
    Close,
    Comma,
    Sep,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Name(s) => write!(f, "'{s}'"),
            Token::Number(n) => write!(f, "'{n}'"),
            Token::Open => f.write_str("'('"),
            Token::Close => f.write_str("')'"),
            Token::Comma => f.write_str("','"),
            Token::Sep => f.write_str("'x'"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<Token>, DomainError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                tokens.push(Token::Open);
            }
            ')' => {
                chars.next();
                tokens.push(Token::Close);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            'x' | 'X' => {
                chars.next();
                tokens.push(Token::Sep);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n = digits.parse::<u32>().map_err(|_| {
                    DomainError::Syntax(format!("parameter '{digits}' is too large"))
                })?;
                tokens.push(Token::Number(n));
            }
            c if c.is_ascii_alphabetic() => {
                // family names are runs of i/v; 'x' never appears in them
                let mut name = String::new();
                while let Some(&a) = chars.peek() {
                    if matches!(a, 'i' | 'I' | 'v' | 'V') {
                        name.push(a.to_ascii_lowercase());
                        chars.next();
                    } else {
                        break;
                    }
                }
                if name.is_empty() {
                    return Err(DomainError::Syntax(format!("unexpected character '{c}'")));
                }
                tokens.push(Token::Name(name));
            }
            other => {
                return Err(DomainError::Syntax(format!(
                    "unexpected character '{other}'"
                )))
            }
        }
    }
    if tokens.is_empty() {
        return Err(DomainError::Syntax("empty domain spec".into()));
    }
    Ok(tokens)
}

fn parse_factor(tokens: &[Token], mut pos: usize) -> Result<(Irreducible, usize), DomainError> {
    let family = match tokens.get(pos) {
        Some(Token::Name(name)) => Family::from_token(name)
            .ok_or_else(|| DomainError::Syntax(format!("unknown family '{name}'")))?,
        Some(t) => {
            return Err(DomainError::Syntax(format!(
                "expected a family name, found {t}"
            )))
        }
        None => return Err(DomainError::Syntax("expected a family name".into())),
    };
    pos += 1;

    let mut params = Vec::new();
    if let Some(Token::Open) = tokens.get(pos) {
        pos += 1;
        loop {
            match tokens.get(pos) {
                Some(&Token::Number(n)) => {
                    params.push(n);
                    pos += 1;
                }
                Some(t) => {
                    return Err(DomainError::Syntax(format!(
                        "expected a parameter, found {t}"
                    )))
                }
                None => return Err(DomainError::Syntax("unterminated parameter list".into())),
            }
            match tokens.get(pos) {
                Some(Token::Comma) => pos += 1,
                Some(Token::Close) => {
                    pos += 1;
                    break;
                }
                Some(t) => {
                    return Err(DomainError::Syntax(format!(
                        "expected ',' or ')', found {t}"
                    )))
                }
                None => return Err(DomainError::Syntax("unterminated parameter list".into())),
            }
        }
    }

    let expected = family.param_count();
    if params.len() != expected {
        return Err(DomainError::ParamCount {
            family,
            expected,
            found: params.len(),
        });
    }
    let spec = match family {
        Family::I => Irreducible::type_i(params[0], params[1])?,
        Family::II => Irreducible::type_ii(params[0])?,
        Family::III => Irreducible::type_iii(params[0])?,
        Family::IV => Irreducible::type_iv(params[0])?,
        Family::V => Irreducible::V,
        Family::VI => Irreducible::VI,
    };
    Ok((spec, pos))
}
