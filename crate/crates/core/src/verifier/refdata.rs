use std::collections::BTreeSet;

use crate::arith::factor;
use crate::groupdata::{ReferenceData, TABLE_DEGREES};
use crate::spectrum::OrderSet;
use crate::verifier::CheckResult;

/// Second transcription of the exceptional-group constants, kept in a
/// different shape from the data file: decimal order, the element orders
/// maximal under divisibility, and `|Out|`.
#[derive(Clone, Copy, Debug)]
pub struct AtlasEntry {
    pub name: &'static str,
    pub order: u64,
    pub maximal_orders: &'static [u64],
    pub out_order: u64,
}

pub const ATLAS_CROSS_REFERENCE: [AtlasEntry; 3] = [
    AtlasEntry { name: "L3(4)", order: 20_160, maximal_orders: &[3, 4, 5, 7], out_order: 12 },
    AtlasEntry { name: "J2", order: 604_800, maximal_orders: &[7, 8, 10, 12, 15], out_order: 2 },
    AtlasEntry { name: "M22", order: 443_520, maximal_orders: &[5, 6, 7, 8, 11], out_order: 2 },
];

fn divisor_closure(maximal: &[u64]) -> OrderSet {
    maximal
        .iter()
        .flat_map(|&m| (1..=m).filter(move |d| m % d == 0))
        .collect()
}

/// Consistency of the embedded exceptional groups and table degrees.
pub fn verify_reference_data(data: &ReferenceData) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let degrees: Vec<u32> = data.rows.iter().map(|r| r.n).collect();
    out.push(
        CheckResult::new(
            "refdata.table_degrees",
            format!("table rows cover exactly the degrees {TABLE_DEGREES:?}"),
            degrees == TABLE_DEGREES,
        )
        .with("listed", degrees),
    );

    let names: BTreeSet<&str> = data.groups.iter().map(|g| g.name.as_str()).collect();
    let expected: BTreeSet<&str> = ATLAS_CROSS_REFERENCE.iter().map(|e| e.name).collect();
    out.push(
        CheckResult::new(
            "refdata.group_names",
            format!("exceptional groups are exactly {expected:?}"),
            names == expected && names.len() == data.groups.len(),
        )
        .with("listed", names.iter().map(|s| s.to_string()).collect::<Vec<_>>()),
    );

    for group in &data.groups {
        let prefix = format!("refdata.{}", group.name);
        let spec: OrderSet = group.spectrum.iter().copied().collect();
        let sorted_unique = group.spectrum.windows(2).all(|w| w[0] < w[1]);

        out.push(
            CheckResult::new(
                format!("{prefix}.spectrum_shape"),
                "spectrum is strictly ascending, contains 1 and is divisor-closed",
                sorted_unique && spec.contains(1) && spec.is_divisor_closed(),
            )
            .with("spectrum", group.spectrum.clone()),
        );

        let spectrum_primes: BTreeSet<u64> = spec
            .iter()
            .filter(|&m| m > 0)
            .flat_map(|m| factor(m).expect("m >= 1").primes().collect::<Vec<_>>())
            .collect();
        let order_primes: BTreeSet<u64> = group.order.primes().collect();
        // Cauchy: every prime of |S| is an element order, and conversely
        out.push(
            CheckResult::new(
                format!("{prefix}.spectrum_primes"),
                "primes dividing element orders are exactly the primes dividing the order",
                spectrum_primes == order_primes,
            )
            .with("spectrum_primes", spectrum_primes.into_iter().collect::<Vec<_>>())
            .with("order_primes", order_primes.into_iter().collect::<Vec<_>>()),
        );

        let too_large: Vec<u64> = spec
            .iter()
            .filter(|&m| m == 0 || !factor(m).expect("m >= 1").divides(&group.order))
            .collect();
        out.push(
            CheckResult::new(
                format!("{prefix}.orders_divide"),
                format!("every element order divides |{}|", group.name),
                too_large.is_empty(),
            )
            .with("violations", too_large),
        );

        let Some(atlas) = ATLAS_CROSS_REFERENCE.iter().find(|e| e.name == group.name) else {
            continue;
        };
        let atlas_order = factor(atlas.order).expect("nonzero");
        out.push(
            CheckResult::new(
                format!("{prefix}.atlas_order"),
                format!("|{}| = {} matches the cross-reference {}", group.name, group.order, atlas.order),
                group.order == atlas_order,
            )
            .with_factored("listed", &group.order)
            .with("cross_reference", atlas.order),
        );
        let closure = divisor_closure(atlas.maximal_orders);
        out.push(
            CheckResult::new(
                format!("{prefix}.atlas_spectrum"),
                format!(
                    "spectrum equals the divisor closure of the maximal orders {:?}",
                    atlas.maximal_orders
                ),
                spec == closure,
            )
            .with("listed", group.spectrum.clone())
            .with("cross_reference", closure.iter().collect::<Vec<_>>()),
        );
        out.push(
            CheckResult::new(
                format!("{prefix}.atlas_out"),
                format!("|Out({})| = {} matches the cross-reference {}", group.name, group.out_order, atlas.out_order),
                group.out_order == atlas.out_order,
            )
            .with("listed", group.out_order)
            .with("cross_reference", atlas.out_order),
        );
    }
    out
}
