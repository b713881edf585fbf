# Copyright (C) 2026 The walgebra Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""The run configuration and the commands of the walgebra command line.

Each command takes a RunConfig and returns (payload, report.Report); the payload
is the JSON-ready result and the report decides the exit status.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import inspect
import logging
import os
import sys
import typing
from typing import Optional

import Levenshtein

from walgebra import decorators
from walgebra import errors
from walgebra import liealg
from walgebra import parser
from walgebra import pbw
from walgebra import report
from walgebra import reps
from walgebra import slices
from walgebra import starprod
from walgebra import walg

logger = logging.getLogger(__name__)

MAX_DEGREE_VARIABLE = "WALG_MAX_DEGREE"
# The sl2 comoment identity is checked on every monomial up to this degree.
COMOMENT_DEGREE = 5

_ALIASES = {"type": "type_tag", "n": "N", "hPrime": "h_prime", "maxLength": "max_length", "sampleDegree": "sample_degree"}


def _SplitGenerators(value):
    if isinstance(value, (list, tuple)):
        return tuple(str(item) for item in value)
    return tuple(part.strip() for part in str(value).split(";") if part.strip())


def ParseModule(value, source="--module"):
    """Parses generator matrices such as '[[[0, 1], [0, 0]]]' into rows of Rats."""
    parsed = parser.DefaultParseValue(value) if isinstance(value, str) else value
    if not isinstance(parsed, (list, tuple)) or not all(isinstance(m, (list, tuple)) for m in parsed):
        raise errors.ParseError("Expected a list of matrices", source=source)
    matrices = []
    for matrix in parsed:
        if not all(isinstance(row, (list, tuple)) for row in matrix):
            raise errors.ParseError("Expected every matrix to be a list of rows", source=source)
        matrices.append(tuple(tuple(parser.ParseRational(v, source) for v in row) for row in matrix))
    return tuple(matrices)


def Suggest(word, choices):
    """The closest choice by edit distance, or None when nothing is close."""
    scored = sorted((Levenshtein.distance(word, choice), choice) for choice in choices)
    if scored and scored[0][0] <= max(2, len(word) // 3):
        return scored[0][1]
    return None


class RunConfig(object):
    """Every knob of a run, validated on construction and echoed into artifacts."""

    @decorators.SetParseFns(generators=_SplitGenerators, module=ParseModule)
    def __init__(
        self,
        command: str,
        type_tag: Optional[str] = None,
        rank: Optional[int] = None,
        partition: Optional[parser.Partition] = None,
        e: Optional[parser.VectorSpec] = None,
        h_prime: Optional[parser.VectorSpec] = None,
        case: Optional[str] = None,
        N: int = 8,
        bound: Optional[int] = None,
        max_length: int = 4,
        output: Optional[str] = None,
        golden: Optional[str] = None,
        seed: int = 0,
        module=None,
        generators=None,
        gk: bool = False,
        trials: int = 10,
        sample_degree: int = 3,
        variables: int = 4,
    ):
        """Instantiates a RunConfig.

        Raises:
          UsageError: If the command is unknown, a bound is below 1, or the
            algebra and nilpotent inputs contradict each other.
        """
        GetCommand(command)
        if N < 1:
            raise errors.UsageError("N must be at least 1, got {}".format(N))
        if bound is not None and bound < 1:
            raise errors.UsageError("The bound must be at least 1, got {}".format(bound))
        if case is not None and (type_tag is not None or rank is not None):
            raise errors.UsageError("--case replaces --type and --rank")
        if partition is not None and e is not None:
            raise errors.UsageError("Give the nilpotent by --partition or by --e, not both")
        if variables < 2 or variables % 2:
            raise errors.UsageError("star-check needs an even number of variables, got {}".format(variables))
        self.command = command
        self.type_tag = type_tag
        self.rank = rank
        self.partition = partition
        self.e = e
        self.h_prime = h_prime
        self.case = case
        self.N = N
        self.bound = bound
        self.max_length = max_length
        self.output = output
        self.golden = golden
        self.seed = seed
        self.module = module
        self.generators = generators
        self.gk = gk
        self.trials = trials
        self.sample_degree = sample_degree
        self.variables = variables
        self.max_degree = _MaxDegree()

    @classmethod
    def FromValues(cls, values, source="<flags>"):
        """Builds a RunConfig from textual or JSON values keyed by field name.

        Raises:
          UsageError: On an unknown field, with the closest known field named.
          ParseError: If a value does not parse as its field's type.
        """
        hints = typing.get_type_hints(cls.__init__)
        fields = [name for name in inspect.signature(cls.__init__).parameters if name != "self"]
        parse_fns = decorators.GetParseFns(cls.__init__)
        converted = {}
        for key, value in values.items():
            name = _ALIASES.get(key, str(key).replace("-", "_"))
            if name not in fields:
                suggestion = Suggest(name, fields)
                hint = "; did you mean {!r}?".format(suggestion) if suggestion else ""
                raise errors.UsageError("Unknown configuration field {!r} in {}{}".format(key, source, hint))
            if value is None:
                continue
            try:
                if name in parse_fns["named"]:
                    converted[name] = parse_fns["named"][name](value)
                elif name in hints:
                    converted[name] = parser.ConvertValue(value, hints[name])
                else:
                    converted[name] = value
            except errors.WalgebraError:
                raise
            except (ValueError, TypeError) as e:
                raise errors.UsageError("Bad value {!r} for {} in {}: {}".format(value, key, source, e))
        if "command" not in converted:
            raise errors.UsageError("No command given; expected one of {}".format(", ".join(COMMANDS)))
        return cls(**converted)

    def EffectiveN(self):
        return self.N if self.max_degree is None else min(self.N, self.max_degree)

    def EffectiveBound(self):
        bound = self.bound if self.bound is not None else self.N
        return bound if self.max_degree is None else min(bound, self.max_degree)

    def ToJson(self):
        return collections.OrderedDict(
            [
                ("command", self.command),
                ("type", self.type_tag),
                ("rank", self.rank),
                ("partition", None if self.partition is None else list(self.partition)),
                ("e", self.e),
                ("hPrime", self.h_prime),
                ("case", self.case),
                ("N", self.N),
                ("bound", self.bound),
                ("maxLength", self.max_length),
                ("maxDegree", self.max_degree),
                ("effectiveN", self.EffectiveN()),
                ("module", self.module),
                ("generators", None if self.generators is None else list(self.generators)),
                ("gk", self.gk),
                ("trials", self.trials),
                ("sampleDegree", self.sample_degree),
                ("variables", self.variables),
            ]
        )


def _MaxDegree():
    value = os.environ.get(MAX_DEGREE_VARIABLE)
    if value is None or not value.strip():
        return None
    try:
        cap = parser.ConvertValue(value, int)
    except ValueError:
        raise errors.UsageError("{} must be an integer, got {!r}".format(MAX_DEGREE_VARIABLE, value))
    if cap < 1:
        raise errors.UsageError("{} must be at least 1, got {}".format(MAX_DEGREE_VARIABLE, cap))
    return cap


def _Element(algebra, spec):
    if isinstance(spec, dict):
        return algebra.Element(spec)
    if len(spec) != algebra.dim:
        raise errors.UsageError("{} coordinates for a {}-dimensional algebra".format(len(spec), algebra.dim))
    return tuple(spec)


def BuildSetup(config):
    """The NilpotentSetup named by a RunConfig.

    Raises:
      UsageError: If the algebra or the nilpotent is not specified.
    """
    if config.case is not None:
        case = liealg.ShippedCase(config.case)
        algebra, e, h_prime = case.algebra, case.e, case.h_prime
    else:
        if config.type_tag is None or config.rank is None:
            raise errors.UsageError("Give --type and --rank, or --case")
        algebra = liealg.BuildClassical(config.type_tag, config.rank)
        if config.partition is not None:
            e = liealg.PartitionNilpotent(algebra, config.partition)
        elif config.e is not None:
            e = _Element(algebra, config.e)
        else:
            raise errors.UsageError("Give the nilpotent by --partition or --e")
        h_prime = None
    if config.h_prime is not None:
        h_prime = _Element(algebra, config.h_prime)
    triple = liealg.JacobsonMorozov(algebra, e)
    logger.info("Nilpotent %s in %s", algebra.Format(triple.e), algebra.name)
    return liealg.BuildSetup(algebra, triple, h_prime=h_prime)


def _Presentation(config):
    setup = BuildSetup(config)
    return walg.BuildPresentation(walg.Quotient(setup), config.EffectiveN())


@decorators.Command("setup", tag="Sec 1.1")
def Setup(config):
    """Builds the sl2-triple, the grading, m, m' and the slice."""
    setup = BuildSetup(config)
    algebra = setup.algebra
    result = report.Report(name="setup", tag="Sec 1.1")
    result.AddPass("triple", detail="e = {}".format(algebra.Format(setup.triple.e)))
    centralizer = len(setup.slice_basis)
    result.AddCheck(
        "dim m",
        2 * setup.dim_m == algebra.dim - centralizer,
        detail="2 dim m = {}, dim g - dim z_g(e) = {}".format(2 * setup.dim_m, algebra.dim - centralizer),
    )
    return setup.ToJson(), result


@decorators.Command("walg", tag="Thm 0.1.0")
def Walg(config):
    """Generators and structure constants of U(g,e) through degree N."""
    presentation = _Presentation(config)
    return presentation.ToJson(), presentation.report


@decorators.Command("verify-gr", tag="Thm 0.1.0")
def VerifyGr(config):
    """Checks dim gr_k U(g,e) = dim K[S]_k for every k <= N."""
    presentation = _Presentation(config)
    setup = presentation.quotient.setup
    payload = {
        "N": presentation.N,
        "sliceDegrees": setup.slice_degrees,
        "gradedDims": {str(k): v for k, v in presentation.graded_dims.items()},
        "generatorDegrees": list(presentation.degrees),
        "commutative": all(not terms for terms in presentation.structure.values()),
    }
    return payload, presentation.report


@decorators.Command("chars", tag="Thm 0.2.3")
def Chars(config):
    """One-dimensional representations of U(g,e) through degree N.

    Characters with irrational values are listed with their minimal polynomial
    but only the rational ones are checked against the relations.
    """
    presentation = _Presentation(config)
    characters = reps.FindCharacters(presentation)
    rational = [character for character in characters if character.IsRational()]
    result = report.Report(name="characters", tag="Thm 0.2.3")
    if not characters:
        result.AddFail("exists", detail="the abelianized relations generate the unit ideal")
    elif not rational:
        result.AddInconclusive("exists", detail="{} characters, none rational".format(len(characters)))
    for index, character in enumerate(rational):
        result.Extend(character.Check(), prefix="character {}".format(index + 1))
    payload = {
        "N": presentation.N,
        "generators": list(presentation.names),
        "characters": [character.ToJson() for character in rational + [c for c in characters if not c.IsRational()]],
    }
    return payload, result


@decorators.Command("ideal-dagger", tag="Prop 3.24")
def IdealDagger(config):
    """Restricts gr J to the slice; J defaults to the ideal of the quadratic Casimir."""
    setup = BuildSetup(config)
    algebra = pbw.PBWAlgebra.FromSetup(setup)
    if config.generators:
        generators = [
            pbw.ParseNCPoly(algebra, text, source="--generators[{}]".format(index))
            for index, text in enumerate(config.generators)
        ]
    else:
        generators = [pbw.TraceCasimir(algebra, 2)]
    gr = slices.GrOfNCIdeal(algebra, generators, config.EffectiveBound(), config.max_length)
    restricted = slices.SliceRestrict(gr, setup)
    variety = slices.VarietyReport(restricted)
    result = report.Report(name="ideal-dagger", tag="Prop 3.24")
    if gr.stable:
        result.AddPass("gr J", detail="stable through degree {}".format(config.EffectiveBound()))
    else:
        result.AddInconclusive("gr J", detail="not stable through degree {}".format(config.EffectiveBound()))
    result.Extend(slices.CheckTransversality(gr, setup))
    payload = {
        "generators": [g.Format() for g in generators],
        "gr": [g.Format() for g in gr.basis],
        "restriction": variety.ToJson(),
    }
    return payload, result


def _Module(config, presentation):
    if config.module is None:
        characters = [c for c in reps.FindCharacters(presentation) if c.IsRational()]
        if not characters:
            raise errors.UsageError("No rational character to induce from; give --module")
        return characters[0].AsModule()
    size = len(config.module[0]) if config.module else 0
    return reps.FinModule(presentation, size, list(config.module))


@decorators.Command("skryabin", tag="Thm 0.1.1")
def Skryabin(config):
    """Truncated S(M) = Q (x)_W M and the recovery of M as its Whittaker vectors."""
    presentation = _Presentation(config)
    module = _Module(config, presentation)
    bound = config.EffectiveBound()
    result = report.Report(name="skryabin", tag="Thm 0.1.1")
    result.Extend(reps.VerifyModule(module), prefix="module")
    result.Extend(reps.SkryabinTruncated(module, bound))
    payload = {"module": module.ToJson(), "bound": bound}
    if config.gk:
        growth = reps.GkDimCheck(module, bound)
        result.Extend(growth, prefix="gk")
        payload["gk"] = growth.ToJson()
    return payload, result


@decorators.Command("star-check", tag="Sec 2.1")
def StarCheck(config):
    """Moyal product axioms, homogeneity, Weyl relations and the sl2 comoment map."""
    half = config.variables // 2
    names = ["q{}".format(i + 1) for i in range(half)] + ["p{}".format(i + 1) for i in range(half)]
    ctx = starprod.SymplecticContext(names)
    result = report.Report(name="star-check", tag="Sec 2.1")
    suites = collections.OrderedDict()
    suites["associativity"] = starprod.CheckAssociativity(ctx, config.sample_degree, config.trials, seed=config.seed)
    suites["homogeneity"] = starprod.CheckHomogeneity(ctx, bound=config.sample_degree)
    suites["weyl"] = starprod.WeylIdentify(ctx).report
    plane = starprod.SymplecticContext(["x", "y"])
    comoment_degree = max(config.sample_degree, COMOMENT_DEGREE)
    suites["comoment"] = starprod.QuantumComoment(plane, liealg.BuildClassical("A", 1)).Verify(bound=comoment_degree)
    for name, suite in suites.items():
        result.Extend(suite, prefix=name)
    payload = {
        "variables": names,
        "comomentDegree": comoment_degree,
        "suites": {name: suite.GetStatus() for name, suite in suites.items()},
    }
    return payload, result


def _Commands():
    module = sys.modules[__name__]
    found = collections.OrderedDict()
    for _, fn in inspect.getmembers(module, inspect.isfunction):
        if decorators.IsCommand(fn):
            found[decorators.GetMetadata(fn)[decorators.COMMAND_NAME]] = fn
    return collections.OrderedDict(sorted(found.items()))


COMMANDS = _Commands()


def GetCommand(name):
    """The command function registered as `name`.

    Raises:
      UsageError: If there is no such command, naming the closest one.
    """
    if name in COMMANDS:
        return COMMANDS[name]
    suggestion = Suggest(str(name), list(COMMANDS))
    hint = "; did you mean {!r}?".format(suggestion) if suggestion else ""
    raise errors.UsageError("Unknown command {!r}{}".format(name, hint))
