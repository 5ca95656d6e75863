import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["test/**/*.test.ts"],
    // every test shells out to the engine, so allow for interpreter startup
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
