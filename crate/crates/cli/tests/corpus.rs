//! The shipped corpus is the catalog written out. `LEIBNIZ_BLESS=1` rewrites
//! the files from the catalog.

use leibniz_cli::corpus_dir;
use leibniz_cli::format::{self, AlgebraFile};
use leibniz_core::catalog;

fn source(name: &str) -> &'static str {
    match name {
        "abelian1" => "one-dimensional abelian",
        "a2" => "two-dimensional abelian",
        "r2" => "non-abelian two-dimensional Lie algebra: [a,b] = -[b,a] = b",
        "l2i" => "nilpotent non-Lie: [b,b] = a",
        "l2ii" => "non-Lie, left but not right Leibniz: [b,a] = [b,b] = a",
        "heis3" => "Heisenberg algebra",
        "sl2" => "sl2 in the basis e, f, h",
        "rot2" => "solvable Lie algebra with eigenvalues +-i",
        "sl2_k2" => "sl2 semidirect its natural module",
        "sl2_plus_l2ii" => "sl2 direct sum l2ii",
        "sl2_plus_k" => "sl2 plus a one-dimensional center",
        "sl2_hemi_k2" => "sl2 acting on its natural module from the left only",
        _ => unreachable!("unknown catalog name {name}"),
    }
}

fn expected() -> Vec<(std::path::PathBuf, AlgebraFile)> {
    let dir = corpus_dir();
    let mut out = Vec::new();
    for (name, alg) in catalog::all() {
        let mut file = AlgebraFile::new(alg).with_name(name);
        file.metadata.source = Some(source(name).into());
        out.push((dir.join(format!("{name}.json")), file));
        let mut fixture = AlgebraFile::from_bimodule(&catalog::faithful_bimodule(name).unwrap()).with_name(name);
        fixture.metadata.source = Some(format!("faithful bimodule of {name}"));
        out.push((dir.join("bimodules").join(format!("{name}.json")), fixture));
    }
    out
}

#[test]
fn corpus_matches_catalog() {
    let bless = std::env::var_os("LEIBNIZ_BLESS").is_some();
    for (path, file) in expected() {
        if bless {
            format::write_path(&path, &file).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, format::to_string(&file), "{}", path.display());
        assert_eq!(format::parse_str(&on_disk).unwrap(), file);
    }
}

#[test]
fn corpus_has_no_strays() {
    let mut known: Vec<_> = expected().into_iter().map(|(p, _)| p).collect();
    known.sort();
    let mut found = Vec::new();
    for sub in [corpus_dir(), corpus_dir().join("bimodules")] {
        for entry in std::fs::read_dir(sub).unwrap() {
            let p = entry.unwrap().path();
            if p.is_file() {
                found.push(p);
            }
        }
    }
    found.sort();
    assert_eq!(found, known);
}
