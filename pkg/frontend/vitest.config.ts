import { defineConfig } from 'vitest/config';

export default defineConfig({
  test: {
    include: ['tests/**/*.test.ts'],
    testTimeout: 30_000,
    hookTimeout: 40_000,
    // the integration suite leases samples from one shared service; keep
    // files sequential so the fixture queue is predictable
    fileParallelism: false,
  },
});
