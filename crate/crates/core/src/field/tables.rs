use super::{Field, FieldElement};

/// Discrete log / antilog tables for a primitive element `g`.
///
/// `antilog[j] = g^(j+1)` for `j` in `0..q-1`, so the last entry is `1`, and
/// `log` maps each nonzero element to its exponent in `1..=q-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerTable {
    generator: FieldElement,
    antilog: Vec<u32>,
    log: Vec<u32>,
}

impl PowerTable {
    pub fn new(field: &Field) -> Self {
        Self::with_generator(field, field.primitive_element())
            .expect("primitive element generates the multiplicative group")
    }

    /// Builds the tables for an arbitrary element; `None` unless it is primitive.
    pub fn with_generator(field: &Field, generator: FieldElement) -> Option<Self> {
        if generator.is_zero() {
            return None;
        }
        let order = field.q() as usize - 1;
        let mut antilog = Vec::with_capacity(order);
        // 0 marks "unassigned"; real exponents are 1..=q-1
        let mut log = vec![0u32; field.q() as usize];
        let mut x = generator;
        for j in 1..=order {
            if log[x.index() as usize] != 0 {
                return None;
            }
            log[x.index() as usize] = j as u32;
            antilog.push(x.index());
            x = field.mul(x, generator);
        }
        Some(PowerTable {
            generator,
            antilog,
            log,
        })
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Order of the multiplicative group, `q - 1`.
    pub fn group_order(&self) -> u32 {
        self.antilog.len() as u32
    }

    /// `g^e` for any `e`, with `g^0 = 1`.
    pub fn power(&self, e: u64) -> FieldElement {
        let order = self.antilog.len() as u64;
        let r = e % order;
        let j = if r == 0 { order - 1 } else { r - 1 };
        FieldElement(self.antilog[j as usize])
    }

    /// The exponent `e` in `1..=q-1` with `g^e = x`; `None` for zero.
    pub fn log(&self, x: FieldElement) -> Option<u32> {
        match self.log.get(x.index() as usize) {
            Some(&e) if e != 0 => Some(e),
            _ => None,
        }
    }

    /// `(g^1, g^2, ..., g^{q-1})` as elements.
    pub fn antilog_row(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.antilog.iter().map(|&i| FieldElement(i))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        match (self.log(x), self.log(y)) {
            (Some(a), Some(b)) => self.power(a as u64 + b as u64),
            _ => FieldElement::ZERO,
        }
    }

    pub fn inv(&self, x: FieldElement) -> Option<FieldElement> {
        self.log(x)
            .map(|e| self.power(self.antilog.len() as u64 - e as u64))
    }

    /// Lines `a^k = <element>` in exponent order. The generator is written `a`
    /// when it is the basis root and `g` otherwise.
    pub fn render(&self, field: &Field) -> Vec<String> {
        let symbol = if self.generator == field.basis_root() {
            "a"
        } else {
            "g"
        };
        self.antilog_row()
            .enumerate()
            .map(|(j, x)| format!("{symbol}^{} = {}", j + 1, field.format(x)))
            .collect()
    }
}
