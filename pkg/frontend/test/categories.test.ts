// Category panel behavior with a mocked API client.

import { beforeEach, describe, expect, it, vi } from 'vitest';
import { ApiClient } from '../src/api';
import { CategoryPanel } from '../src/categories';

const TAXONOMY = ['adult', 'news', 'religion', 'science'];

function makeApi(overrides: Partial<Record<keyof ApiClient, unknown>> = {}) {
  return {
    taxonomy: vi.fn(async () => ({ topCategories: TAXONOMY, subcategories: {} })),
    blockedCategories: vi.fn(async () => [] as string[]),
    setBlockedCategories: vi.fn(async (cats: string[]) => [...cats].sort()),
    ...overrides,
  } as unknown as ApiClient;
}

function toggle(root: HTMLElement, category: string): void {
  const input = root.querySelector<HTMLInputElement>(
    `input[data-category="${category}"]`)!;
  input.checked = !input.checked;
  input.dispatchEvent(new Event('change'));
}

describe('CategoryPanel', () => {
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = '<div id="panel"></div>';
    root = document.getElementById('panel')!;
  });

  it('renders one toggle per top-level category', async () => {
    const panel = new CategoryPanel(makeApi(), root);
    await panel.load();
    expect(root.querySelectorAll('input[type=checkbox]')).toHaveLength(TAXONOMY.length);
  });

  it('toggle then apply PUTs the new set', async () => {
    const api = makeApi();
    const panel = new CategoryPanel(api, root);
    await panel.load();
    toggle(root, 'religion');
    await panel.apply();
    expect(api.setBlockedCategories).toHaveBeenCalledWith(['religion']);
  });

  it('no toggles means apply is a no-op', async () => {
    const api = makeApi();
    const panel = new CategoryPanel(api, root);
    await panel.load();
    await panel.apply();
    expect(api.setBlockedCategories).not.toHaveBeenCalled();
    expect(root.querySelector<HTMLButtonElement>('#apply-categories')!.disabled).toBe(true);
  });

  it('rolls the toggle back and shows an error toast on API 400', async () => {
    const api = makeApi({
      setBlockedCategories: vi.fn(async () => {
        throw new Error('unknown_category');
      }),
    });
    const panel = new CategoryPanel(api, root);
    await panel.load();
    toggle(root, 'news');
    await panel.apply();
    const input = root.querySelector<HTMLInputElement>('input[data-category="news"]')!;
    expect(input.checked).toBe(false); // reverted
    const toast = document.getElementById('toast')!;
    expect(toast.className).toContain('toast-error');
    expect(toast.textContent).toContain('unknown_category');
  });

  it('reflects server state after apply (UI holds no local truth)', async () => {
    const api = makeApi({
      // server normalizes to a different set than requested
      setBlockedCategories: vi.fn(async () => ['adult', 'religion']),
    });
    const panel = new CategoryPanel(api, root);
    await panel.load();
    toggle(root, 'religion');
    await panel.apply();
    expect(panel.pendingCategories).toEqual(['adult', 'religion']);
    expect(root.querySelector<HTMLInputElement>(
      'input[data-category="adult"]')!.checked).toBe(true);
  });
});
