// @vitest-environment happy-dom
/** DOM-level drive of the mounted app against a scripted fake backend. */

import { beforeEach, describe, expect, it } from 'vitest';

import {
  AnnotationPayload,
  Checklist,
  NextSampleResponse,
  ReviewApi,
  Sample,
  SubmitResult,
} from '../src/api.js';
import { MountedApp, mountApp } from '../src/app.js';
import { ReviewSession } from '../src/session.js';

const METHOD = Array.from({ length: 30 }, (_, i) => `int line${i + 1} = ${i};`).join('\n');

const CHECKLIST: Checklist = {
  smell: 'LONG_METHOD',
  questions: [
    { id: 'LM.Q1', text: 'hard to read?', kind: 'YES_NO' },
    { id: 'LM.Q2', text: 'too many accesses?', kind: 'YES_NO' },
    { id: 'LM.Q3', text: 'too many purposes?', kind: 'YES_NO' },
    { id: 'LM.Q4', text: 'which lines?', kind: 'ACTION' },
  ],
};

function lmSample(): Sample {
  return {
    id: 'dom-sample',
    smell: 'LONG_METHOD',
    origin: 'GENERATED',
    group: 'M_GROUP',
    label: null,
    code: METHOD,
    context: {},
    metrics: { loc: 30, nom: null, noa: null, nfdi: null },
    likelihood: 'MODERATE',
    provenance: {},
  };
}

class ScriptedApi extends ReviewApi {
  submissions: AnnotationPayload[] = [];
  queue: NextSampleResponse[] = [
    { sample: lmSample(), checklist: CHECKLIST },
    { sample: null, checklist: null },
  ];

  constructor() {
    super('http://scripted');
  }

  override async nextSample(): Promise<NextSampleResponse> {
    return this.queue.shift() ?? { sample: null, checklist: null };
  }

  override async submitAnnotation(payload: AnnotationPayload): Promise<SubmitResult> {
    this.submissions.push(payload);
    return { accepted: true };
  }
}

let root: HTMLElement;
let api: ScriptedApi;
let app: MountedApp;

function click(selector: string): void {
  const el = root.querySelector(selector) as HTMLElement | null;
  if (!el) throw new Error(`nothing matches ${selector}`);
  el.dispatchEvent(new MouseEvent('click', { bubbles: true }));
}

function dragLines(from: number, to: number): void {
  const start = root.querySelector(`[data-line="${from}"] .lineno`) as HTMLElement;
  const end = root.querySelector(`[data-line="${to}"] .lineno`) as HTMLElement;
  start.dispatchEvent(new MouseEvent('mousedown', { bubbles: true }));
  end.dispatchEvent(new MouseEvent('mouseup', { bubbles: true }));
}

beforeEach(async () => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById('app') as HTMLElement;
  api = new ScriptedApi();
  app = mountApp(root, new ReviewSession(api, 'dom-reviewer'));
  await app.idle();
});

describe('mounted review screen', () => {
  it('renders the sample with numbered, selectable lines', () => {
    expect(root.querySelectorAll('.code-line').length).toBe(30);
    expect(root.querySelector('[data-line="12"][data-selectable]')).not.toBeNull();
    expect(root.textContent).toContain('LONG_METHOD');
  });

  it('answers flow through button clicks and gate the submit', async () => {
    expect((root.querySelector('[data-submit]') as HTMLButtonElement).disabled).toBe(true);
    click('[data-yes="LM.Q1"]');
    click('[data-no="LM.Q2"]');
    click('[data-yes="LM.Q3"]');
    click('[data-verdict="NEGATIVE"]');
    const submit = root.querySelector('[data-submit]') as HTMLButtonElement;
    expect(submit.disabled).toBe(false);
  });

  it('drag selection marks extract ranges in the view', () => {
    click('[data-verdict="POSITIVE"]');
    dragLines(12, 25);
    expect(app.session.lineRanges).toEqual([[12, 25]]);
    expect(root.querySelectorAll('.code-line.sel').length).toBe(14);
    expect(root.querySelector('.picked-ranges')?.textContent).toContain('12–25');
  });

  it('submit sends exactly the on-screen draft and advances to exhaustion', async () => {
    click('[data-yes="LM.Q1"]');
    click('[data-yes="LM.Q2"]');
    click('[data-no="LM.Q3"]');
    click('[data-verdict="POSITIVE"]');
    dragLines(12, 25);
    click('[data-submit]');
    await app.idle();
    expect(api.submissions).toHaveLength(1);
    const sent = api.submissions[0]!;
    expect(sent.sample_id).toBe('dom-sample');
    expect(sent.verdict).toBe('POSITIVE');
    expect(sent.action?.extract_lines).toEqual([[12, 25]]);
    expect(sent.answers).toEqual({ 'LM.Q1': true, 'LM.Q2': true, 'LM.Q3': false });
    expect(root.textContent).toContain('Queue exhausted');
  });

  it('keyboard flow answers questions and submits', async () => {
    const key = (k: string) =>
      document.dispatchEvent(new KeyboardEvent('keydown', { key: k, bubbles: true }));
    key('y');
    key('n');
    key('y');
    key('x'); // not smelly
    key('Enter');
    await app.idle();
    expect(api.submissions).toHaveLength(1);
    expect(api.submissions[0]!.verdict).toBe('NEGATIVE');
    expect(api.submissions[0]!.answers).toEqual({
      'LM.Q1': true,
      'LM.Q2': false,
      'LM.Q3': true,
    });
  });
});
