use std::cmp::Ordering;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u16]>);

impl Monomial {
    pub fn new(exponents: Vec<u16>) -> Self {
        Monomial(exponents.into_boxed_slice())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial::new(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    /// Panics on exponent overflow (beyond `u16::MAX`).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.checked_add(b).expect("exponent overflow")).collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, or `None` when `self` does not divide `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(other.0.iter()).map(|(&a, &b)| b.checked_sub(a)).collect::<Option<Box<[u16]>>>().map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Index of the single variable when this is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nz = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nz.next(), nz.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::Grevlex => "grevlex",
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grevlex" => Ok(OrderKind::Grevlex),
            other => Err(format!("unknown monomial order `{other}` (expected lex or grevlex)")),
        }
    }
}

/// A lex or grevlex order with an explicit variable precedence.
///
/// `precedence[0]` is the greatest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Precedence follows variable index: `x_0 > x_1 > ...`.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, precedence: (0..nvars).collect() }
    }

    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Self {
        let mut sorted = precedence.clone();
        sorted.sort_unstable();
        assert!(sorted.iter().copied().eq(0..precedence.len()), "precedence must be a permutation");
        MonomialOrder { kind, precedence }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.precedence {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                let by_degree = a.total_degree().cmp(&b.total_degree());
                if by_degree != Ordering::Equal {
                    return by_degree;
                }
                // smaller exponent in the least variable wins
                for &i in self.precedence.iter().rev() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}
