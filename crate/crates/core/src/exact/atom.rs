use std::fmt;

/// An irreducible constant appearing in closed forms.
///
/// The derived ordering is the canonical atom order:
/// `Pi < Ln2 < EulerGamma < ZetaOdd(3) < ZetaOdd(5) < … < LiHalf(4) < … < SigmaTilde < Opaque`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstantAtom {
    Pi,
    Ln2,
    EulerGamma,
    /// ζ(n) for odd n ≥ 3.
    ZetaOdd(u32),
    /// Li_k(1/2) for k ≥ 4.
    LiHalf(u32),
    /// σ̃_{n,p} = S_{n,p}(−1) with no known closed form.
    SigmaTilde(u32, u32),
    Opaque(String),
}

impl ConstantAtom {
    pub fn zeta_odd(n: u32) -> Self {
        assert!(n >= 3 && n % 2 == 1, "ZetaOdd needs an odd argument >= 3, got {n}");
        ConstantAtom::ZetaOdd(n)
    }

    pub fn li_half(k: u32) -> Self {
        assert!(k >= 4, "LiHalf needs k >= 4, got {k}");
        ConstantAtom::LiHalf(k)
    }

    /// Transcendental weight; opaque atoms count as 0.
    pub fn weight(&self) -> u32 {
        match self {
            ConstantAtom::Pi | ConstantAtom::Ln2 | ConstantAtom::EulerGamma => 1,
            ConstantAtom::ZetaOdd(n) | ConstantAtom::LiHalf(n) => *n,
            ConstantAtom::SigmaTilde(n, p) => n + p,
            ConstantAtom::Opaque(_) => 0,
        }
    }

    /// Machine name used by the text and JSON formats.
    pub fn name(&self) -> String {
        match self {
            ConstantAtom::Pi => "pi".into(),
            ConstantAtom::Ln2 => "ln2".into(),
            ConstantAtom::EulerGamma => "gamma".into(),
            ConstantAtom::ZetaOdd(n) => format!("zeta{n}"),
            ConstantAtom::LiHalf(k) => format!("li{k}half"),
            ConstantAtom::SigmaTilde(n, p) => format!("sigma_{n}_{p}"),
            ConstantAtom::Opaque(name) => format!("{{{name}}}"),
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "pi" => return Some(ConstantAtom::Pi),
            "ln2" => return Some(ConstantAtom::Ln2),
            "gamma" => return Some(ConstantAtom::EulerGamma),
            _ => {}
        }
        if let Some(inner) = name.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
            return (!inner.is_empty()).then(|| ConstantAtom::Opaque(inner.to_string()));
        }
        if let Some(rest) = name.strip_prefix("zeta") {
            let n: u32 = rest.parse().ok()?;
            return (n >= 3 && n % 2 == 1).then_some(ConstantAtom::ZetaOdd(n));
        }
        if let Some(rest) = name.strip_prefix("li").and_then(|s| s.strip_suffix("half")) {
            let k: u32 = rest.parse().ok()?;
            return (k >= 4).then_some(ConstantAtom::LiHalf(k));
        }
        if let Some(rest) = name.strip_prefix("sigma_") {
            let (n, p) = rest.split_once('_')?;
            let (n, p): (u32, u32) = (n.parse().ok()?, p.parse().ok()?);
            return (n >= 1 && p >= 1).then_some(ConstantAtom::SigmaTilde(n, p));
        }
        None
    }

    pub fn pretty(&self) -> String {
        match self {
            ConstantAtom::Pi => "π".into(),
            ConstantAtom::Ln2 => "ln2".into(),
            ConstantAtom::EulerGamma => "γ".into(),
            ConstantAtom::ZetaOdd(n) => format!("ζ({n})"),
            ConstantAtom::LiHalf(k) => format!("Li{}(1/2)", subscript(*k)),
            ConstantAtom::SigmaTilde(n, p) => format!("σ̃({n},{p})"),
            ConstantAtom::Opaque(name) => name.clone(),
        }
    }
}

impl fmt::Display for ConstantAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn subscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

pub(crate) fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let mut atoms = vec![
            ConstantAtom::Opaque("c".into()),
            ConstantAtom::SigmaTilde(2, 4),
            ConstantAtom::LiHalf(5),
            ConstantAtom::LiHalf(4),
            ConstantAtom::ZetaOdd(5),
            ConstantAtom::ZetaOdd(3),
            ConstantAtom::EulerGamma,
            ConstantAtom::Ln2,
            ConstantAtom::Pi,
        ];
        atoms.sort();
        assert_eq!(atoms[0], ConstantAtom::Pi);
        assert_eq!(atoms[3], ConstantAtom::ZetaOdd(3));
        assert_eq!(atoms[5], ConstantAtom::LiHalf(4));
        assert_eq!(atoms[8], ConstantAtom::Opaque("c".into()));
    }

    #[test]
    fn names_round_trip() {
        for atom in [
            ConstantAtom::Pi,
            ConstantAtom::Ln2,
            ConstantAtom::EulerGamma,
            ConstantAtom::ZetaOdd(7),
            ConstantAtom::LiHalf(6),
            ConstantAtom::SigmaTilde(4, 2),
            ConstantAtom::Opaque("catalan".into()),
        ] {
            assert_eq!(ConstantAtom::from_name(&atom.name()), Some(atom));
        }
        assert_eq!(ConstantAtom::from_name("zeta4"), None);
        assert_eq!(ConstantAtom::from_name("li3half"), None);
    }
}
