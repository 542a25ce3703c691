/**
 * CLI: train the five base models and write the scores CSV.
 *
 *   node dist/main.js train --data data/australian.dat --seed 7 --out scores.csv
 *   node dist/main.js train --synthetic --out scores.csv   (schema demo only)
 */

import { writeFileSync } from "node:fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { DEFAULT_OPTIONS, runPipeline, runPipelineOnData } from "./pipeline.js";
import { makeSyntheticDataset } from "./synthetic.js";

export function buildCli(argv: string[]) {
  return yargs(argv)
    .command(
      "train",
      "train the base models and export test-split probability scores",
      (command) =>
        command
          .option("data", { type: "string", describe: "path to australian.dat" })
          .option("synthetic", {
            type: "boolean",
            default: false,
            describe: "use a synthetic schema-compatible dataset instead of --data",
          })
          .option("seed", { type: "number", default: DEFAULT_OPTIONS.seed })
          .option("out", { type: "string", default: "scores.csv" })
          .option("search", {
            type: "number",
            default: DEFAULT_OPTIONS.searchBudget,
            describe: "sampled configurations per classic model",
          })
          .option("cnn-search", {
            type: "number",
            default: DEFAULT_OPTIONS.cnnBudget,
            describe: "sampled configurations for the CNN",
          })
          .check((args) => {
            if (!args.synthetic && !args.data) {
              throw new Error("either --data <file> or --synthetic is required");
            }
            return true;
          }),
      (args) => {
        const options = {
          seed: args.seed,
          searchBudget: args.search,
          cnnBudget: args["cnn-search"],
        };
        const result = args.synthetic
          ? runPipelineOnData(makeSyntheticDataset(args.seed), options)
          : runPipeline(args.data as string, options);
        writeFileSync(args.out, result.csv, "utf-8");
        console.log(`wrote ${args.out}: ${result.testSize} rows, ${result.testPositives} positives`);
        for (const model of result.models) {
          console.log(
            `  ${model.column} ${model.family}: cv=${model.cvAccuracy.toFixed(4)} ` +
              `test=${model.testAccuracy.toFixed(4)} ${model.description}`,
          );
        }
      },
    )
    .demandCommand(1)
    .strict()
    .help();
}

const isMain = process.argv[1]?.endsWith("main.js");
if (isMain) {
  buildCli(hideBin(process.argv)).parseSync();
}
