use std::path::Path;

use bwl::enumerate::claims::{claim_ids, derive_exceptional_graphs, verify};
use bwl::enumerate::EnumLimits;

fn main() {
    let limits = EnumLimits::default();
    let data_dir = Path::new("data/exceptional");
    if std::env::args().any(|a| a == "regen") {
        std::fs::create_dir_all(data_dir).unwrap();
        for (label, graph) in derive_exceptional_graphs(&limits).unwrap() {
            let path = data_dir.join(format!("{label}.wg"));
            std::fs::write(&path, graph.to_wg()).unwrap();
            println!("wrote {}", path.display());
        }
        return;
    }
    let only: Vec<String> = std::env::args().skip(1).collect();
    for id in claim_ids() {
        if !only.is_empty() && !only.iter().any(|o| o == id) {
            continue;
        }
        match verify(id, &limits, data_dir) {
            Ok(entries) => {
                for e in entries {
                    println!(
                        "{:<12} {:<40} {:<12} {:>8.2?}  {}",
                        e.claim,
                        e.params,
                        e.verdict.as_str(),
                        e.runtime,
                        e.detail
                    );
                }
            }
            Err(err) => println!("{id}: ERROR {err}"),
        }
    }
}
