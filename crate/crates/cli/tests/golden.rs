// SPDX-License-Identifier: Apache-2.0

//! Byte-exact output of fixed commands. Set `RAMFORGE_BLESS=1` to rewrite
//! the files under `tests/golden/`.

mod support;

use support::{golden_path, run, CASES};

#[test]
fn golden_outputs() {
    let bless = std::env::var_os("RAMFORGE_BLESS").is_some();
    for (name, args) in CASES {
        let (first, code) = run(args);
        assert_eq!(code, 0, "{name} exited with {code}");
        let (second, _) = run(args);
        assert_eq!(first, second, "{name} is not deterministic");
        let path = golden_path(name);
        if bless {
            std::fs::write(&path, &first).unwrap();
            continue;
        }
        let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert!(first == expected, "{name} differs from {}", path.display());
    }
}
