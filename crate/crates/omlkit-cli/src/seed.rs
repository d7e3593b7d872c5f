//! Names for the built-in lattices.
//!
//! Both the `catalog` subcommand and the `--seed-catalog` flag go through
//! [`parse`]: `catalog MO 2` spells the size as a separate argument, while
//! `--seed-catalog mo2` fuses it into the name. Either spelling, any case.

use omlkit::{boolean_algebra, g12, mo, OmlTable};

/// One member of the built-in family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogChoice {
    /// The horizontal sum `MO<n>`: `n` incomparable complement pairs.
    Mo(usize),
    /// The boolean algebra `B<k>` on `k` atoms.
    Boolean(usize),
    /// The twelve-element `G12`, smallest case with a center beyond the
    /// bounds that is not the whole lattice.
    G12,
}

/// Resolve a catalog name plus optional size parameters.
pub fn parse(name: &str, params: &[u64]) -> Result<CatalogChoice, String> {
    let lower = name.to_ascii_lowercase();

    let sized = |make: fn(usize) -> CatalogChoice| match params {
        [p] => Ok(make(*p as usize)),
        _ => Err(format!("catalog `{name}` takes exactly one size parameter")),
    };

    match lower.as_str() {
        "g12" if params.is_empty() => Ok(CatalogChoice::G12),
        "g12" => Err("catalog `G12` takes no parameters".into()),
        "mo" => sized(CatalogChoice::Mo),
        "b" | "boolean" => sized(CatalogChoice::Boolean),
        _ => parse_fused(name, &lower, params),
    }
}

/// Handle the glued spellings `mo3`, `b2`, `boolean4`.
fn parse_fused(name: &str, lower: &str, params: &[u64]) -> Result<CatalogChoice, String> {
    let unknown =
        || format!("unknown catalog lattice `{name}`; expected MO<n>, B<k>/boolean<k>, or G12");

    let (stem, make): (&str, fn(usize) -> CatalogChoice) = if lower.starts_with("boolean") {
        ("boolean", CatalogChoice::Boolean)
    } else if lower.starts_with("mo") {
        ("mo", CatalogChoice::Mo)
    } else if lower.starts_with('b') {
        ("b", CatalogChoice::Boolean)
    } else {
        return Err(unknown());
    };

    let size: usize = lower[stem.len()..].parse().map_err(|_| unknown())?;
    if !params.is_empty() {
        return Err(format!(
            "catalog `{name}` already carries its size; drop the parameters"
        ));
    }
    Ok(make(size))
}

/// Canonical display name: `MO2`, `B3`, `G12`.
pub fn display_name(choice: CatalogChoice) -> String {
    match choice {
        CatalogChoice::Mo(n) => format!("MO{n}"),
        CatalogChoice::Boolean(k) => format!("B{k}"),
        CatalogChoice::G12 => "G12".into(),
    }
}

/// Build the chosen lattice, surfacing constructor errors as messages.
pub fn build(choice: CatalogChoice) -> Result<OmlTable, String> {
    match choice {
        CatalogChoice::Mo(n) => mo(n).map_err(|e| e.to_string()),
        CatalogChoice::Boolean(k) => boolean_algebra(k).map_err(|e| e.to_string()),
        CatalogChoice::G12 => Ok(g12()),
    }
}

/// Report notes explaining how the choice was realized.
pub fn notes(choice: CatalogChoice) -> Vec<String> {
    match choice {
        CatalogChoice::G12 => vec!["G12 built as the product MO2 \u{d7} B1".into()],
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fused_and_split_spellings_agree() {
        assert_eq!(parse("MO2", &[]).unwrap(), CatalogChoice::Mo(2));
        assert_eq!(parse("mo", &[2]).unwrap(), CatalogChoice::Mo(2));
        assert_eq!(parse("boolean3", &[]).unwrap(), CatalogChoice::Boolean(3));
        assert_eq!(parse("B", &[3]).unwrap(), CatalogChoice::Boolean(3));
        assert_eq!(parse("b3", &[]).unwrap(), CatalogChoice::Boolean(3));
        assert_eq!(parse("g12", &[]).unwrap(), CatalogChoice::G12);
    }

    #[test]
    fn bad_spellings_are_rejected() {
        assert!(parse("q8", &[]).is_err());
        assert!(parse("mo", &[]).is_err());
        assert!(parse("mo2", &[2]).is_err());
        assert!(parse("g12", &[1]).is_err());
        assert!(parse("mo2x", &[]).is_err());
    }

    #[test]
    fn display_names_are_canonical() {
        assert_eq!(display_name(parse("Boolean4", &[]).unwrap()), "B4");
        assert_eq!(display_name(parse("G12", &[]).unwrap()), "G12");
    }
}
