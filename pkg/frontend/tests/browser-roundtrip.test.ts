// @vitest-environment happy-dom
/**
 * The secondary round-trip criterion, end to end at the DOM level: a scripted
 * browser session against the real review service — mount the app, click
 * through the checklist, drag-select lines 12–25, submit, and find the
 * annotation verbatim in the exported dataset.
 */

import { ChildProcess, execFileSync, spawn } from 'node:child_process';
import { mkdtempSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { afterAll, beforeAll, expect, it } from 'vitest';

import { ReviewApi } from '../src/api.js';
import { mountApp } from '../src/app.js';
import { ReviewSession } from '../src/session.js';

// happy-dom rewrites import.meta.url to an http scheme; vitest runs with the
// package root as cwd, so resolve the fixture from there
const FIXTURE_SCRIPT = join(process.cwd(), 'tests', 'fixture', 'build_fixture.py');
const PORT = 18443;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

beforeAll(async () => {
  const workdir = mkdtempSync(join(tmpdir(), 'review-dom-'));
  execFileSync('python3', [FIXTURE_SCRIPT, workdir], { stdio: 'inherit' });
  server = spawn(
    'smellforge',
    ['serve', '-c', join(workdir, 'fixture.yaml'), '--bind', `127.0.0.1:${PORT}`],
    { stdio: 'ignore' },
  );
  const started = Date.now();
  for (;;) {
    try {
      if ((await fetch(`${BASE}/api/stats`)).ok) break;
    } catch {
      /* not up yet */
    }
    if (Date.now() - started > 20_000) throw new Error('service did not come up');
    await new Promise((r) => setTimeout(r, 200));
  }
}, 30_000);

afterAll(() => {
  server?.kill();
});

it('a clicked-through review lands verbatim in the export', async () => {
  document.body.innerHTML = '<div id="app"></div>';
  const root = document.getElementById('app') as HTMLElement;
  const api = new ReviewApi(BASE);
  const app = mountApp(root, new ReviewSession(api, 'browser-reviewer', 'LONG_METHOD'));
  await app.idle();
  expect(app.session.state).toBe('reviewing');
  const sampleId = app.session.sample!.id;

  const click = (selector: string) =>
    (root.querySelector(selector) as HTMLElement).dispatchEvent(
      new MouseEvent('click', { bubbles: true }),
    );
  click('[data-yes="LM.Q1"]');
  click('[data-no="LM.Q2"]');
  click('[data-yes="LM.Q3"]');
  click('[data-verdict="POSITIVE"]');
  (root.querySelector('[data-line="12"] .lineno') as HTMLElement).dispatchEvent(
    new MouseEvent('mousedown', { bubbles: true }),
  );
  (root.querySelector('[data-line="25"] .lineno') as HTMLElement).dispatchEvent(
    new MouseEvent('mouseup', { bubbles: true }),
  );
  const submit = root.querySelector('[data-submit]') as HTMLButtonElement;
  expect(submit.disabled).toBe(false);
  click('[data-submit]');
  await app.idle();

  const exported = await api.exportRecords();
  const record = exported.records.find((r) => (r as { id: string }).id === sampleId) as {
    label: string;
    ground_truth: { kind: string; extract_lines: number[][] };
    provenance: { label_source: string; annotation: { answers: Record<string, boolean> } };
  };
  expect(record).toBeDefined();
  expect(record.label).toBe('POSITIVE');
  expect(record.ground_truth.extract_lines).toEqual([[12, 25]]);
  expect(record.provenance.label_source).toBe('reviewer:browser-reviewer');
  expect(record.provenance.annotation.answers).toEqual({
    'LM.Q1': true,
    'LM.Q2': false,
    'LM.Q3': true,
  });
}, 30_000);
