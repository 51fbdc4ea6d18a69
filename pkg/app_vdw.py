"""
COMPLEJOS DE VAN DER WAERDEN
Genera vdW(n,k), calcula tablas de Betti y verifica la clasificación
(resolución lineal, Cohen-Macaulay, nivel, Gorenstein) en un barrido de celdas.

Códigos de salida: 0 acuerdo, 1 fallo de verificación, 2 límite de recursos,
3 error de entrada.
"""
import argparse
import json
import logging
import sys
from pathlib import Path

from utils import __version__, config
from utils.cache_local import ResultCache
from utils.classify import (
    analyze_complex, compare_fields, quasi_forest_property, summarize_reports, verify_lemma_range,
    verify_range,
)
from utils.complex_core import make_vdw, one_skeleton
from utils.errors import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED, VdwError
from utils.excel_generator import betti_excel, reports_excel
from utils.file_processor import format_facets, format_graph, read_facets
from utils.homology import FieldSpec
from utils.resolution import hochster_betti, render_text, to_csv

logger = logging.getLogger("app_vdw")


def _emitir(texto, out=None):
    if out:
        Path(out).write_text(texto, encoding="utf-8")
        logger.info("✅ escrito %s", out)
    else:
        sys.stdout.write(texto)


def _json(datos):
    return json.dumps(datos, indent=2, ensure_ascii=False) + "\n"


def _cargar_complejo(args):
    if args.vdw:
        return make_vdw(tuple(args.vdw))
    return read_facets(args.facets)


def cmd_gen(args):
    c = make_vdw((args.n, args.k))
    if args.out:
        _emitir(format_facets(c), args.out)
        print(f"{len(c.facets)} facetas")
    else:
        _emitir(format_facets(c))
        logger.info("📊 %d facetas", len(c.facets))
    return EXIT_OK


def cmd_betti(args):
    campo = FieldSpec.parse(args.field)
    c = _cargar_complejo(args)
    q = None
    cache = ResultCache(args.cache) if args.cache and args.vdw else None
    if cache is not None:
        q = cache.get_betti(args.vdw[0], args.vdw[1], campo)
    if q is None:
        q = hochster_betti(c, campo, jobs=args.jobs, limit=args.sweep_limit)
    if args.format == "json":
        _emitir(q.dumps() + "\n", args.out)
    elif args.format == "csv":
        _emitir(to_csv(q), args.out)
    elif args.format == "xlsx":
        if not args.out:
            raise VdwError("--format xlsx requiere --out")
        Path(args.out).write_bytes(betti_excel(q))
        logger.info("✅ escrito %s", args.out)
    else:
        _emitir(render_text(q), args.out)
    return EXIT_OK


def cmd_analyze(args):
    campo = FieldSpec.parse(args.field)
    c = _cargar_complejo(args)
    analisis = analyze_complex(c, campo, jobs=args.jobs, limit=args.sweep_limit)
    _emitir(_json(analisis.to_json()), args.out)
    return EXIT_OK


def cmd_verify(args):
    campos = [FieldSpec.parse(f) for f in (args.field or ["Q"])]
    cache = None if args.no_cache else ResultCache(args.cache)
    pasadas = []
    for campo in campos:
        logger.info("📊 barrido n ≤ %d sobre %s", args.n_max, campo.name)
        pasadas.append(verify_range(args.n_max, campo, jobs=args.jobs, limit=args.sweep_limit,
                                    cache=cache, progress=not args.quiet))
    divergencias = []
    for otra in pasadas[1:]:
        divergencias += compare_fields(pasadas[0], otra)
    reportes = [r for pasada in pasadas for r in pasada]
    resumen = summarize_reports(reportes, divergencias)
    if args.out:
        _emitir(_json({"version": __version__,
                       "reports": [r.to_json() for r in reportes],
                       "summary": resumen}), args.out)
    if args.xlsx:
        Path(args.xlsx).write_bytes(reports_excel(reportes))
        logger.info("✅ escrito %s", args.xlsx)
    _emitir(_json(resumen))
    if resumen["failures"]:
        logger.error("❌ %d desacuerdos", len(resumen["failures"]))
        return EXIT_VERIFICATION_FAILED
    logger.info("✅ %d celdas en acuerdo", resumen["cells"])
    return EXIT_OK


def cmd_skeleton(args):
    c = _cargar_complejo(args)
    _emitir(format_graph(one_skeleton(c)), args.out)
    return EXIT_OK


def cmd_lemma(args):
    chequeos = verify_lemma_range(args.n_min, args.n_max)
    fallos = [ch.to_json() for ch in chequeos if not ch.ok]
    _emitir(_json({"cells": len(chequeos), "failures": fallos}))
    if fallos:
        logger.error("❌ %d celdas contradicen las no-caras predichas", len(fallos))
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_qf_check(args):
    contraejemplos = quasi_forest_property(
        samples=args.samples, seed=args.seed,
        max_vertices=args.max_vertices, max_facets=args.max_facets)
    _emitir(_json({
        "samples": args.samples,
        "seed": config.DEFAULT_SEED if args.seed is None else args.seed,
        "counterexamples": [{"n": c.n, "facets": [list(f.vertices) for f in c.facets]}
                            for c in contraejemplos],
    }))
    return EXIT_VERIFICATION_FAILED if contraejemplos else EXIT_OK


def _origen(p):
    grupo = p.add_mutually_exclusive_group(required=True)
    grupo.add_argument("--vdw", nargs=2, type=int, metavar=("N", "K"), help="usar vdW(N,K)")
    grupo.add_argument("--facets", metavar="RUTA", help="archivo de facetas")


def build_parser():
    ap = argparse.ArgumentParser(prog="vdw", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true", help="registro DEBUG")
    ap.add_argument("-q", "--quiet", action="store_true", help="sólo advertencias y errores")
    ap.add_argument("--sweep-limit", type=int, default=None,
                    help=f"límite de n del barrido de Hochster (defecto {config.SWEEP_LIMIT})")
    sub = ap.add_subparsers(dest="comando", required=True)

    p = sub.add_parser("gen", help="facetas de vdW(n,k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("betti", help="tabla de Betti del anillo de Stanley-Reisner")
    _origen(p)
    p.add_argument("--field", default="Q")
    p.add_argument("--format", choices=["text", "json", "csv", "xlsx"], default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", default=None, help="directorio de caché (sólo con --vdw)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("analyze", help="todos los predicados con sus certificados")
    _origen(p)
    p.add_argument("--field", default="Q")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="barrido 0 < k < n ≤ N contra las fórmulas cerradas")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--field", action="append", help="Q, GF2 o GFp:<p>; se puede repetir")
    p.add_argument("--jobs", type=int, default=config.default_jobs())
    p.add_argument("--cache", default=config.CACHE_DIR)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--out", help="reporte JSON completo")
    p.add_argument("--xlsx", help="reporte Excel")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("skeleton", help="1-esqueleto en formato de grafo")
    _origen(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_skeleton)

    p = sub.add_parser("lemma", help="no-caras predichas para 1 < k < n/2")
    p.add_argument("--n-min", type=int, default=7)
    p.add_argument("--n-max", type=int, default=30)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("qf-check", help="cuasi-bosque ⇔ flag y 1-esqueleto cordal")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-vertices", type=int, default=7)
    p.add_argument("--max-facets", type=int, default=8)
    p.set_defaults(func=cmd_qf_check)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    nivel = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=nivel, format="%(message)s", stream=sys.stderr, force=True)
    try:
        return args.func(args)
    except VdwError as e:
        logger.error("❌ %s", e)
        return e.exit_code
    except OSError as e:
        logger.error("❌ error de E/S: %s", e)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
