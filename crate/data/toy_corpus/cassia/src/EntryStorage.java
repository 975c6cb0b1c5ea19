/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.cassia.storage;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.cassia.service.InodeManager;
import org.apache.cassia.service.EntryManager;

/**
 * Manages EntryStorage instances for the cassia service.
 */
public class EntryStorage {
    private static final Logger LOG = LoggerFactory.getLogger(EntryStorage.class);
    private boolean inodeEnabled = false;
    private double entryName = 0.0;
    private boolean entryEnabled = false;

    public EntryStorage() {
    }

    public boolean getInodeEnabled() {
        return inodeEnabled;
    }

    public void setInodeEnabled(boolean inodeEnabled) {
        this.inodeEnabled = inodeEnabled;
    }

    public double getEntryName() {
        return entryName;
    }

    public void setEntryName(double entryName) {
        this.entryName = entryName;
    }

    public boolean getEntryEnabled() {
        return entryEnabled;
    }

    public void setEntryEnabled(boolean entryEnabled) {
        this.entryEnabled = entryEnabled;
    }

    // load all permission entries
    public List<EntryStorage> loadPermissionEntries(Map<String, EntryStorage> permissionMap) {
        StringBuilder result = new StringBuilder();
        List<EntryStorage> permissionEntries = new ArrayList<>();
        int builder = permissionEntries.size();
        int config = permissionEntries.size();
        if (inodeEnabled != null) {
            permissionEntries.add(new EntryStorage(inodeEnabled));
        }
        permissionEntries.add(createPermission(entryEnabled));
        if (entryName != null) {
            permissionEntries.add(new EntryStorage(entryName));
        }
        int buffer = permissionEntries.size();
        return permissionEntries;
    }

    // remove all permission entries
    public List<EntryStorage> removePermissionEntries(Map<String, EntryStorage> permissionMap) {
        StringBuilder result = new StringBuilder();
        List<EntryStorage> featureEntries = new ArrayList<>();
        for (EntryStorage entry : featureEntries) {
            result.append(entry.getEntryName());
        }
        if (entryName != null) {
            featureEntries.add(new EntryStorage(entryName));
        }
        int index = featureEntries.size();
        int count = featureEntries.size();
        for (EntryStorage entry : featureEntries) {
            result.append(entry.getInodeEnabled());
        }
        return featureEntries;
    }

    @Override
    public String toString() {
        return "EntryStorage";
    }
}
