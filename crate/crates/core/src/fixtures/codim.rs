use super::FixtureError;

/// Numerical data of a contact singularity `eta_Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityDescriptor {
    pub name: String,
    pub algebra: String,
    pub dim_q: u32,
    pub b_q: u32,
    pub appears_for_ell_at_least: i64,
}

impl SingularityDescriptor {
    fn new(name: &str, algebra: &str, dim_q: u32, b_q: u32, from: i64) -> Self {
        SingularityDescriptor {
            name: name.to_string(),
            algebra: algebra.to_string(),
            dim_q,
            b_q,
            appears_for_ell_at_least: from,
        }
    }

    /// Width of the Thom series, `dim Q - 1`.
    pub fn width(&self) -> u32 {
        self.dim_q - 1
    }

    /// `"(dimQ-1)l+b"`.
    pub fn formula(&self) -> String {
        format!("{}l+{}", self.width(), self.b_q)
    }
}

/// The algebras of dimension at most 4, in table order.
pub fn descriptor_table() -> Vec<SingularityDescriptor> {
    ["A0", "A1", "A2", "III22", "A3", "I22", "III23", "(x,y,z)^2"]
        .iter()
        .map(|n| descriptor(n).expect("table entry"))
        .collect()
}

/// Look up `A<m>`, `I<a><b>` (single-digit `a <= b`), `III22`, `III23`,
/// `(x,y,z)^2` or `(x^2,y^3)`.
pub fn descriptor(name: &str) -> Option<SingularityDescriptor> {
    let d = SingularityDescriptor::new;
    match name {
        "III22" => return Some(d(name, "C[x,y]/(x^2,xy,y^2)", 3, 4, 1)),
        "III23" => return Some(d(name, "C[x,y]/(xy,x^2,y^3)", 4, 5, 1)),
        "(x,y,z)^2" => return Some(d(name, "C[x,y,z]/(x,y,z)^2", 4, 9, 6)),
        "(x^2,y^3)" => return Some(d(name, "C[x,y]/(x^2,y^3)", 6, 7, 0)),
        _ => {}
    }
    if let Some(m) = name.strip_prefix('A') {
        let m: u32 = m.parse().ok()?;
        return Some(d(name, &format!("C[x]/(x^{})", m + 1), m + 1, m, 0));
    }
    if let Some(ab) = name.strip_prefix('I') {
        let digits: Vec<u32> = ab.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?;
        if let [a, b] = digits[..] {
            if 2 <= a && a <= b {
                return Some(d(name, &format!("C[x,y]/(xy,x^{a}+y^{b})"), a + b, a + b, 0));
            }
        }
    }
    None
}

/// `(dim Q - 1) l + b(Q)`.
pub fn codim_contact(desc: &SingularityDescriptor, ell: i64) -> Result<i64, FixtureError> {
    if ell < desc.appears_for_ell_at_least {
        return Err(FixtureError::NotDefinedForEll {
            name: desc.name.clone(),
            ell,
            min: desc.appears_for_ell_at_least,
        });
    }
    Ok(desc.width() as i64 * ell + desc.b_q as i64)
}

/// Codimension of the order-one Thom–Boardman class `Sigma^i`: `i (i + l)`.
pub fn codim_tb(i: u32, ell: u32) -> u64 {
    i as u64 * (i as u64 + ell as u64)
}
