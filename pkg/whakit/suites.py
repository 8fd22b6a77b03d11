"""
Verification suites grouped the way the command line runs them.

Each ``run_*`` function takes an algebra and the active :class:`Config` and
returns the list of reports of one command. The zoo manifests refer to the
same names through :data:`SUITES`.
"""

from typing import Callable, Dict, List, Optional, Tuple

from . import linalg
from .config import Config
from .cyclic import ModularPair, check_modular_pair, verify_lambda_relations
from .double import DoubleAlgebra, build_double, double_integral_certificate
from .errors import CriterionUnavailable, InputError, VerificationError
from .grouplikes import (check_grouplike_properties, check_integral_module_structure, check_s2_implementer,
                         distinguished, s2_implementer_on_AT)
from .hopf_modules import (check_whm, dual_action_route, dual_whm, freeness_certificates,
                           quasi_frobenius_certificate, regular_whm, structure_theorem)
from .integrals import (DualPair, antipode_presentations, check_integral_identities, dual_pair,
                        find_nondegenerate_left_integral, integral_coproduct_twist, integral_projections,
                        larson_sweedler, unimodularity)
from .logger import get_logger
from .modules import (check_associativity, check_module, class_decomposition, conjugates, is_invertible_module,
                      radical_annihilates_unit, regular_module, rigidity, unit_constraints, unit_module)
from .radford import antipode_order, gauge_check, nakayama_lambda, radford_check, radford_power
from .report import AxiomReport
from .wba import WeakBialgebra, check_wba, check_wba_identities
from .wha import WeakHopfAlgebra, check_projection_identities, check_wha, nakayama_LR, separability
from .zoo import ZooEntry


Suite = Callable[[WeakBialgebra, Config], List[AxiomReport]]


def _hopf(A: WeakBialgebra) -> Optional[WeakHopfAlgebra]:
    return A if isinstance(A, WeakHopfAlgebra) else None


def require_pair(A: WeakBialgebra, config: Config) -> DualPair:
    """
    A dual pair of left integrals found within the configured search bound.

    Raises:
        VerificationError: if no non-degenerate left integral is found
    """
    bound = config.get("search_bound")
    l = find_nondegenerate_left_integral(A, bound)
    if l is None:
        raise VerificationError("no non-degenerate left integral found within bound", context={"bound": bound})
    return dual_pair(A, l)


def run_validate(A: WeakBialgebra, config: Config) -> List[AxiomReport]:
    reports = [check_wba(A), check_wba_identities(A)]
    W = _hopf(A)
    if W is not None:
        reports += [check_wha(W), check_projection_identities(W), separability(W).report, nakayama_LR(W).report]
    return reports


def run_integrals(A: WeakBialgebra, config: Config) -> List[AxiomReport]:
    bound = config.get("search_bound")
    l = find_nondegenerate_left_integral(A, bound)
    if l is None:
        report = AxiomReport("integrals")
        report.check_true("non-degenerate left integral found", "existence of non-degenerate integrals", False,
                          detail=f"no non-degenerate left integral found within bound {bound}")
        return [report]
    pair = dual_pair(A, l)
    reports = [pair.report]
    W = _hopf(A)
    if W is None:
        reports.append(larson_sweedler(A, pair)[1])
        return reports
    reports += [check_integral_identities(W), integral_projections(W).report,
                antipode_presentations(W, pair), integral_coproduct_twist(W, pair),
                unimodularity(W, bound).report]
    return reports


def run_antipode(A: WeakBialgebra, config: Config) -> Tuple[Optional[WeakHopfAlgebra], List[AxiomReport]]:
    """Larson-Sweedler pipeline; the algebra is None when no antipode could be certified."""
    bound = config.get("search_bound")
    l = find_nondegenerate_left_integral(A, bound)
    if l is None:
        report = AxiomReport("larson-sweedler")
        report.check_true("non-degenerate left integral found", "existence of non-degenerate integrals", False,
                          detail=f"no non-degenerate left integral found within bound {bound}")
        return None, [report]
    pair = dual_pair(A, l)
    W, report = larson_sweedler(A, pair)
    ok = pair.report.passed and report.passed
    return (W if ok else None), [pair.report, report]


def run_grouplikes(A: WeakBialgebra, config: Config) -> List[AxiomReport]:
    W = _hopf(A)
    if W is None:
        raise InputError("grouplike suites need an antipode")
    pair = require_pair(W, config)
    dist = distinguished(W, pair)
    reports = [dist.report, check_grouplike_properties(W, [dist.s]),
               check_integral_module_structure(W, pair, dist)]
    t = s2_implementer_on_AT(W, config.get("search_bound"))
    if t is None:
        missing = AxiomReport("s2-implementer")
        missing.check_true("implementer found", "S^2 is inner on A^T", False,
                           detail="no grouplike implementer of S^2 within the search bound")
        reports.append(missing)
    else:
        reports.append(check_s2_implementer(W, t))
    return reports


def run_modules(A: WeakBialgebra, config: Config) -> List[AxiomReport]:
    unit, regular = unit_module(A), regular_module(A)
    reports = [check_module(unit), check_module(regular)]
    try:
        check = radical_annihilates_unit(A)
        radical_report = AxiomReport("radical")
        radical_report.check_true("Pi^L(rad A) = 0", "radical and the unit module", check.annihilates,
                                  detail=f"dim rad A = {check.radical.dim}")
        reports.append(radical_report)
    except CriterionUnavailable as exc:
        get_logger().warning("modules", "suites", "run_modules", "radical check skipped", reason=exc.message)
    W = _hopf(A)
    if W is None:
        return reports
    reports.append(check_associativity(unit, unit, regular))
    for module in (unit, regular):
        reports += [unit_constraints(module).report, conjugates(module).report, rigidity(module),
                    class_decomposition(W, module).report]
    reports.append(is_invertible_module(W, unit, config.get("module_search_bound")).report)
    return reports


def run_hopfmod(A: WeakBialgebra, config: Config) -> List[AxiomReport]:
    W = _hopf(A)
    if W is None:
        raise InputError("weak Hopf module suites need an antipode")
    regular, dual = regular_whm(W), dual_whm(W)
    return [check_whm(regular), check_whm(dual), structure_theorem(regular).report,
            structure_theorem(dual).report, dual_action_route(regular), quasi_frobenius_certificate(W),
            freeness_certificates(W, config.get("module_search_bound")).report]


def run_radford(A: WeakBialgebra, config: Config) -> List[AxiomReport]:
    W = _hopf(A)
    if W is None:
        raise InputError("Radford suites need an antipode")
    bound = config.get("search_bound")
    pair = require_pair(W, config)
    dist = distinguished(W, pair)
    return [nakayama_lambda(W, pair).report, radford_check(W, pair), radford_power(W, pair, 2),
            antipode_order(W, config.get("max_order"), bound).report,
            gauge_check(W, pair, dist.sigma, bound), unimodularity(W, bound).report]


def build_configured_double(A: WeakBialgebra, config: Config) -> DoubleAlgebra:
    W = _hopf(A)
    if W is None:
        raise InputError("the double needs an antipode")
    return build_double(W, require_pair(W, config), config.get("double_reading"))


def run_double(A: WeakBialgebra, config: Config) -> List[AxiomReport]:
    W = _hopf(A)
    if W is None:
        raise InputError("the double needs an antipode")
    pair = require_pair(W, config)
    double = build_double(W, pair, config.get("double_reading"))
    return [double.report, double_integral_certificate(double, pair)]


def default_modular_pair(A: WeakHopfAlgebra, config: Config) -> ModularPair:
    """(1-hat, t) with t a grouplike implementer of S^2 on A^T, or (1-hat, 1) if none is found."""
    t = s2_implementer_on_AT(A, config.get("search_bound"))
    return check_modular_pair(A, A.dual_unit, t if t is not None else A.unit)


def run_cyclic(A: WeakBialgebra, config: Config, sigma: Optional[linalg.Matrix] = None,
               s: Optional[linalg.Matrix] = None) -> List[AxiomReport]:
    W = _hopf(A)
    if W is None:
        raise InputError("the cyclic module needs an antipode")
    if (sigma is None) != (s is None):
        raise InputError("give both sigma and s, or neither")
    mp = default_modular_pair(W, config) if sigma is None else check_modular_pair(W, sigma, s)
    return [mp.report, verify_lambda_relations(W, mp, config.get("max_degree"), config.get("ambient_cap"))]


SUITES: Dict[str, Suite] = {
    "wba": lambda A, c: [check_wba(A)],
    "wba-identities": lambda A, c: [check_wba_identities(A)],
    "wha": lambda A, c: [check_wha(A)],
    "projection-identities": lambda A, c: [check_projection_identities(A)],
    "separability": lambda A, c: [separability(A).report],
    "nakayama": lambda A, c: [nakayama_LR(A).report],
    "integrals": run_integrals,
    "grouplikes": run_grouplikes,
    "modules": run_modules,
    "hopfmod": run_hopfmod,
    "radford": run_radford,
    "double": run_double,
    "cyclic": run_cyclic,
}


def check_manifest(A: WeakBialgebra, manifest, config: Optional[Config] = None) -> List[AxiomReport]:
    """
    Run every suite named in a zoo manifest.

    Raises:
        InputError: for an unknown suite name
    """
    config = config or Config()
    reports: List[AxiomReport] = []
    for name in manifest:
        if name not in SUITES:
            raise InputError(f"unknown suite {name!r} in manifest")
        reports += SUITES[name](A, config)
    get_logger().info("zoo", "suites", "check_manifest", "manifest checked", name=A.name,
                      suites=len(manifest), passed=all(r.passed for r in reports))
    return reports


def check_entry(entry: ZooEntry, config: Optional[Config] = None,
                A: Optional[WeakBialgebra] = None) -> List[AxiomReport]:
    """Run a registry entry's manifest under the entry's limits, building it unless ``A`` is given."""
    config = (config or Config()).capped(**entry.limits)
    return check_manifest(A if A is not None else entry.build(), entry.manifest, config)
