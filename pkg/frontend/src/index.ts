/**
 * Typed client for the silbound CLI.
 *
 * A thin marshaling layer: matrices and labels are written to temp CSV files
 * with full round-trip precision, the CLI does every computation, and its
 * JSON reports come back verbatim as typed objects. Core validation failures
 * surface as {@link CoreError} carrying the core's own error name.
 */

import { execFile, spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { promisify } from "node:util";

export type Matrix = number[][];

export interface BoundResult {
  kappa: number;
  ub: number;
  min_ub: number;
  max_ub: number;
  bounds: number[];
  lambda_star: number[];
}

export interface SilhouetteResult {
  a: (number | null)[];
  b: number[];
  s: number[];
  asw: number;
}

export interface SweepEntry {
  k: number;
  asw: number;
  worst_case_rel_err: number;
}

export interface SelectResult {
  outcome: "selected" | "not_clusterable";
  best_k: number | null;
  best_asw: number | null;
  ub: number;
  tau: number;
  worst_case_rel_err: number | null;
  stopped_early: boolean;
  evaluated_ks: number[];
  labels: number[] | null;
  per_k?: SweepEntry[];
}

/** Built-in matrix algorithms, or an external command template. The template
 * is run once per K with `{k}` and `{input}` substituted and must print one
 * integer label per line; that is how caller-supplied clusterers plug into
 * the core's selection loop without moving any logic client-side. */
export type Algorithm =
  | "kmedoids"
  | "hac-single"
  | "hac-weighted"
  | "exhaustive"
  | { command: string };

export interface SelectOptions {
  epsilon: number;
  tau: number;
  kMax: number;
  kappa?: number;
  seed?: number;
  noStopSweep?: boolean;
}

export interface ClientOptions {
  /** CLI invocation, e.g. ["python3", "-m", "silbound"]. Overrides SILBOUND_CLI. */
  cli?: string[];
}

/** A core-side failure, named exactly as the core names it (e.g. "KappaOutOfRange"). */
export class CoreError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly exitCode: number,
  ) {
    super(`${code}: ${message}`);
    this.name = "CoreError";
  }
}

function cliCommand(options?: ClientOptions): string[] {
  if (options?.cli && options.cli.length > 0) return options.cli;
  const env = process.env.SILBOUND_CLI;
  if (env && env.trim()) return env.trim().split(/\s+/);
  return ["python3", "-m", "silbound"];
}

function run(args: string[], options?: ClientOptions): { status: number; stdout: string } {
  const [command, ...prefix] = cliCommand(options);
  const proc = spawnSync(command, [...prefix, ...args], { encoding: "utf8" });
  if (proc.error) throw proc.error;
  const status = proc.status ?? -1;
  if (status !== 0 && status !== 3) {
    const line = proc.stderr.split("\n").find((l) => l.startsWith("error:"));
    if (line) {
      const [, code, detail] = line.match(/^error:([A-Za-z]+):(.*)$/) ?? [];
      throw new CoreError(code ?? "Unknown", detail ?? line, status);
    }
    throw new CoreError("Unknown", proc.stderr.trim() || `exit ${status}`, status);
  }
  return { status, stdout: proc.stdout };
}

/** Full-precision CSV cell: String(x) is the shortest round-trip form. */
export function matrixCsv(matrix: Matrix): string {
  return matrix.map((row) => row.map(String).join(",")).join("\n") + "\n";
}

function withTempDir<T>(body: (dir: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "silbound-"));
  try {
    return body(dir);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

function reportFromCli<T>(inputCsv: string, args: (dir: string, input: string) => string[], options?: ClientOptions): T {
  return withTempDir((dir) => {
    const input = join(dir, "matrix.csv");
    const output = join(dir, "report.json");
    writeFileSync(input, inputCsv);
    run([...args(dir, input), "--output", output], options);
    return JSON.parse(readFileSync(output, "utf8")) as T;
  });
}

/** Per-point silhouette ceilings and the dataset ASW upper bound. */
export function bound(matrix: Matrix, kappa = 1, options?: ClientOptions): BoundResult {
  return reportFromCli(matrixCsv(matrix), (_dir, input) => [
    "bound", "--input", input, "--input-kind", "matrix", "--kappa", String(kappa),
  ], options);
}

/** Per-point silhouette widths a, b, s and their mean for a labeling. */
export function silhouette(matrix: Matrix, labels: number[], options?: ClientOptions): SilhouetteResult {
  return withTempDir((dir) => {
    const input = join(dir, "matrix.csv");
    const labelsPath = join(dir, "labels.csv");
    const output = join(dir, "report.json");
    writeFileSync(input, matrixCsv(matrix));
    writeFileSync(labelsPath, labels.map((v) => String(v)).join("\n") + "\n");
    run([
      "silhouette", "--input", input, "--input-kind", "matrix",
      "--labels", labelsPath, "--output", output,
    ], options);
    return JSON.parse(readFileSync(output, "utf8")) as SilhouetteResult;
  });
}

/** Average silhouette width of a labeling. */
export function asw(matrix: Matrix, labels: number[], options?: ClientOptions): number {
  return silhouette(matrix, labels, options).asw;
}

/** Early-stopping ASW model selection in the core; exit code 3 comes back as
 * the "not_clusterable" outcome rather than an exception. */
export function select(
  matrix: Matrix,
  algorithm: Algorithm,
  selectOptions: SelectOptions,
  options?: ClientOptions,
): SelectResult {
  const name = typeof algorithm === "string" ? algorithm : `cmd:${algorithm.command}`;
  const args = (_dir: string, input: string) => {
    const argv = [
      "select", "--input", input, "--input-kind", "matrix",
      "--algorithm", name,
      "--epsilon", String(selectOptions.epsilon),
      "--tau", String(selectOptions.tau),
      "--k-max", String(selectOptions.kMax),
    ];
    if (selectOptions.kappa !== undefined) argv.push("--kappa", String(selectOptions.kappa));
    if (selectOptions.seed !== undefined) argv.push("--seed", String(selectOptions.seed));
    if (selectOptions.noStopSweep) argv.push("--no-stop-sweep");
    return argv;
  };
  return reportFromCli(matrixCsv(matrix), args, options);
}

/** Client and core versions. */
export function version(options?: ClientOptions): { client: string; core: string } {
  const { stdout } = run(["--version"], options);
  return { client: "0.1.0", core: stdout.trim().split(/\s+/).pop() ?? "" };
}

const execFileAsync = promisify(execFile);

async function runAsync(args: string[], options?: ClientOptions): Promise<void> {
  const [command, ...prefix] = cliCommand(options);
  try {
    await execFileAsync(command, [...prefix, ...args], { encoding: "utf8" });
  } catch (err) {
    const failure = err as { code?: number; stderr?: string };
    if (failure.code === 3) return; // not-clusterable outcome, not an error
    const line = (failure.stderr ?? "").split("\n").find((l) => l.startsWith("error:"));
    if (line) {
      const [, code, detail] = line.match(/^error:([A-Za-z]+):(.*)$/) ?? [];
      throw new CoreError(code ?? "Unknown", detail ?? line, failure.code ?? -1);
    }
    throw err;
  }
}

async function reportFromCliAsync<T>(
  inputCsv: string,
  args: (dir: string, input: string) => string[],
  options?: ClientOptions,
): Promise<T> {
  const dir = mkdtempSync(join(tmpdir(), "silbound-"));
  try {
    const input = join(dir, "matrix.csv");
    const output = join(dir, "report.json");
    writeFileSync(input, inputCsv);
    await runAsync([...args(dir, input), "--output", output], options);
    return JSON.parse(readFileSync(output, "utf8")) as T;
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

/** Non-blocking counterparts: identical semantics, the event loop stays free
 * while the core computes. */
export const promises = {
  bound(matrix: Matrix, kappa = 1, options?: ClientOptions): Promise<BoundResult> {
    return reportFromCliAsync(matrixCsv(matrix), (_dir, input) => [
      "bound", "--input", input, "--input-kind", "matrix", "--kappa", String(kappa),
    ], options);
  },

  silhouette(matrix: Matrix, labels: number[], options?: ClientOptions): Promise<SilhouetteResult> {
    return reportFromCliAsync(matrixCsv(matrix), (dir, input) => {
      const labelsPath = join(dir, "labels.csv");
      writeFileSync(labelsPath, labels.map((v) => String(v)).join("\n") + "\n");
      return ["silhouette", "--input", input, "--input-kind", "matrix", "--labels", labelsPath];
    }, options);
  },

  async asw(matrix: Matrix, labels: number[], options?: ClientOptions): Promise<number> {
    return (await this.silhouette(matrix, labels, options)).asw;
  },

  select(
    matrix: Matrix,
    algorithm: Algorithm,
    selectOptions: SelectOptions,
    options?: ClientOptions,
  ): Promise<SelectResult> {
    const name = typeof algorithm === "string" ? algorithm : `cmd:${algorithm.command}`;
    return reportFromCliAsync(matrixCsv(matrix), (_dir, input) => {
      const argv = [
        "select", "--input", input, "--input-kind", "matrix",
        "--algorithm", name,
        "--epsilon", String(selectOptions.epsilon),
        "--tau", String(selectOptions.tau),
        "--k-max", String(selectOptions.kMax),
      ];
      if (selectOptions.kappa !== undefined) argv.push("--kappa", String(selectOptions.kappa));
      if (selectOptions.seed !== undefined) argv.push("--seed", String(selectOptions.seed));
      if (selectOptions.noStopSweep) argv.push("--no-stop-sweep");
      return argv;
    }, options);
  },
};
